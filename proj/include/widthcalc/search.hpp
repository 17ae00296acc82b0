#ifndef WIDTHCALC_SEARCH_HPP
#define WIDTHCALC_SEARCH_HPP

#include "widthcalc/complexity.hpp"
#include "widthcalc/moves.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace widthcalc {

/// Isomorphism-invariant 64-bit digest: colour refinement over the typed
/// incidence structure, ignoring ids.
std::uint64_t canonical_hash(const Complex& c);

enum class Policy { First, Greedy };
const char* to_string(Policy p);

struct ThinConfig {
    Policy policy = Policy::First;
    std::size_t cap = 1'000'000;
    std::size_t max_diagnostics = 200;
};

struct TraceStep {
    std::size_t step = 0;
    Move move;
    ComplexityVector before;
    ComplexityVector after;
    std::uint64_t hash_after = 0;  ///< canonical_hash of the complex after the step
    std::vector<std::string> checks;
};

struct ThinResult {
    Complex result;
    std::vector<TraceStep> trace;
    bool cap_reached = false;
    std::size_t skipped = 0;               ///< rejected certificates
    std::vector<std::string> diagnostics;  ///< first few rejections
};

/// Applies reducing moves while any applies, otherwise one untelescoping
/// (as a full elementary thinning sequence), until neither applies or the
/// step cap is reached.
ThinResult thin(const Complex& c, const MoveProposer& proposer, const ThinConfig& cfg = {});

struct Successor {
    Move move;
    Complex result;
    CheckLog log;
};

/// Every proposed move that applies: reducing moves if any apply, else
/// untelescopings. Pending consolidations are always included.
std::vector<Successor> successors(const Complex& c, const MoveProposer& proposer, std::size_t* skipped = nullptr,
                                  std::vector<std::string>* diagnostics = nullptr, std::size_t max_diagnostics = 0,
                                  bool stop_at_first = false);

struct RewriteConfig {
    std::size_t max_depth = 6;
    std::size_t node_budget = 2000;
};

struct RewriteNode {
    std::size_t index = 0;
    std::uint64_t hash = 0;
    Complex complex;
    ComplexityVector vector;
    std::size_t depth = 0;
    bool terminal = false;  ///< no move applies
};

struct RewriteEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::string label;
};

struct RewriteGraph {
    std::vector<RewriteNode> nodes;
    std::vector<RewriteEdge> edges;
    bool incomplete = false;  ///< depth cap or node budget cut the search short

    std::vector<std::size_t> sinks() const;
    std::string to_dot() const;
};

/// Breadth-first exploration, nodes identified up to canonical_hash.
RewriteGraph rewrite_graph(const Complex& c, const MoveProposer& proposer, const RewriteConfig& cfg = {});

/// The complex itself as a DOT graph: thick levels carry I-up / I-down,
/// compressionbodies carry mu.
std::string complex_to_dot(const Complex& c);

}  // namespace widthcalc

#endif
