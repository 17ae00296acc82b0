#ifndef WIDTHCALC_PROPOSER_HPP
#define WIDTHCALC_PROPOSER_HPP

#include "widthcalc/moves.hpp"

#include <cstddef>
#include <vector>

namespace widthcalc {

struct ProposerLimits {
    std::size_t discs_per_side = 32;
    std::size_t max_boundary_subset = 3;
    std::size_t max_untelescopes = 256;
};

/// Enumerates numerically admissible certificates of every move kind. The
/// list over-approximates: callers apply each candidate and skip the ones
/// that throw.
class ExhaustiveProposer : public MoveProposer {
public:
    explicit ExhaustiveProposer(ProposerLimits limits = {}) : limits_(limits) {}
    std::vector<Move> propose(const Complex& c) const override;

    /// Separating and non-separating disc data for one compressionbody.
    std::vector<DiscData> discs(const Complex& c, const Compressionbody& cb) const;

private:
    ProposerLimits limits_;
};

/// Proposes a fixed list of certificates, dropping those whose thick level
/// no longer exists.
class ScriptedProposer : public MoveProposer {
public:
    explicit ScriptedProposer(std::vector<Move> script) : script_(std::move(script)) {}
    std::vector<Move> propose(const Complex& c) const override;

private:
    std::vector<Move> script_;
};

class EmptyProposer : public MoveProposer {
public:
    std::vector<Move> propose(const Complex&) const override { return {}; }
};

}  // namespace widthcalc

#endif
