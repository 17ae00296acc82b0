#ifndef WIDTHCALC_MOVES_HPP
#define WIDTHCALC_MOVES_HPP

#include "widthcalc/model.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace widthcalc {

/// A move certificate was rejected. `check()` names the violated rule.
class MoveError : public std::runtime_error {
public:
    MoveError(std::string check, const std::string& detail)
        : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}
    const std::string& check() const { return check_; }

private:
    std::string check_;
};

/// Names of the rules checked while applying moves, in order of evaluation.
struct CheckLog {
    std::vector<std::string> passed;
};

enum class ArcType { Vertical, Bridge, Ghost, Loop };
const char* to_string(ArcType a);

/// Change in tangle counts when a disc meeting the graph once cuts an arc of
/// the given type (the cut arc's two halves are counted separately).
TangleSummary cut_delta(ArcType a);
int count_of(const TangleSummary& t, ArcType a);

struct DiscSplit {
    Surface side1;  ///< part of the compressed surface kept on the main side
    Surface side2;
    std::vector<std::string> ports1;  ///< owning cb's negative ports per side
    std::vector<std::string> ports2;
    TangleSummary tangle1;
    TangleSummary tangle2;
};

/// An sc-disc described numerically: |D ∩ T| = q, separating or not, and
/// for separating discs how everything is split between the two sides.
struct DiscData {
    int q = 0;
    bool separating = false;
    std::optional<ArcType> arc;  ///< arc type crossed when q == 1
    std::optional<DiscSplit> split;
};

/// Result of compressing a surface along a disc: one surface, or two when
/// the disc separates (main side first).
std::vector<Surface> compress_surface(const Surface& s, const DiscData& d);

struct ReducedPiece {
    Surface plus;
    std::vector<std::string> ports;
    std::vector<Surface> minus;
    TangleSummary tangle;
    int mu = 0;
};

struct BoundaryReduction {
    int mu_before = 0;
    std::vector<ReducedPiece> pieces;  ///< one or two; main piece first
};

/// Boundary-reduces a compressionbody of a valid complex along the disc and
/// checks the index identity  sum mu(pieces) = mu - 6 + 4q + 6(separating)
/// together with the sc-disc side conditions. Throws MoveError.
BoundaryReduction boundary_reduce(const Compressionbody& cb, const Complex& c, const DiscData& d,
                                  CheckLog* log = nullptr);

struct Consolidate {
    std::string thick;
    std::string thin;
    std::optional<TangleSummary> merged;
    bool merged_product = false;
};

/// Roles: levels h_minus, h_plus, f, h_minus_split, phi_minus, h_plus_split,
/// phi_plus; compressionbodies lower_main, lower_split, minus_upper,
/// plus_lower, upper_main, upper_split, product_minus, product_plus.
/// Every field is optional; missing entries are planned from the disc data.
struct LocalReplacement {
    std::map<std::string, std::string> ids;
    std::map<std::string, TangleSummary> tangles;
    std::set<std::string> products;
};

struct Untelescope {
    std::string thick;
    DiscData disc_minus;  ///< in the lower compressionbody
    DiscData disc_plus;   ///< in the upper compressionbody
    LocalReplacement outcome;
};

enum class DestabKind { Stab, MeridStab, Bdy, MeridBdy, GhostBdy, MeridGhostBdy };
const char* to_string(DestabKind k);
bool is_meridional(DestabKind k);

struct Destabilize {
    DestabKind kind = DestabKind::Stab;
    std::string thick;
    /// Side holding the cut disc (meridional stabilization) or holding S and
    /// the ghost arcs before the move (boundary kinds).
    Side side = Side::Upper;
    std::vector<std::string> boundary;  ///< S
    int ghosts = 0;                     ///< |Γ|
    std::optional<ArcType> arc;         ///< arc cut by a meridional stabilization
    std::optional<TangleSummary> upper;
    std::optional<TangleSummary> lower;
};

enum class MergeCase { BridgeBridge, VerticalBridge };
const char* to_string(MergeCase m);

struct Unperturb {
    std::string thick;
    Side side = Side::Upper;  ///< side of the bridge disc pushed across
    MergeCase merge = MergeCase::BridgeBridge;
};

struct UndoRemovable {
    std::string thick;
    Side loop_side = Side::Lower;  ///< default pattern: the removed arc closes to a loop here
    std::optional<TangleSummary> upper;
    std::optional<TangleSummary> lower;
};

using Move = std::variant<Consolidate, Untelescope, Destabilize, Unperturb, UndoRemovable>;

std::string kind_name(const Move& m);
std::string describe(const Move& m);
/// Moves that make a complex reduced (everything but untelescoping).
bool is_reducing(const Move& m);

Complex apply_consolidate(const Complex& c, const Consolidate& m, CheckLog* log = nullptr);
/// Untelescopes only: the result keeps the split-off product regions.
Complex apply_untelescope(const Complex& c, const Untelescope& m, CheckLog* log = nullptr);
Complex elementary_thinning_sequence(const Complex& c, const Untelescope& m, CheckLog* log = nullptr);
Complex apply_destabilize(const Complex& c, const Destabilize& m, CheckLog* log = nullptr);
Complex apply_unperturb(const Complex& c, const Unperturb& m, CheckLog* log = nullptr);
Complex apply_undo_removable(const Complex& c, const UndoRemovable& m, CheckLog* log = nullptr);

struct MoveOutcome {
    Complex result;
    CheckLog log;
};

/// Applies any move; untelescoping runs the full elementary thinning sequence.
MoveOutcome apply_move(const Complex& c, const Move& m);

/// Consolidation certificates for every product-certified compressionbody
/// whose negative boundary is a thin level.
std::vector<Consolidate> pending_consolidations(const Complex& c);

class MoveProposer {
public:
    virtual ~MoveProposer() = default;
    virtual std::vector<Move> propose(const Complex& c) const = 0;
};

struct ReducedCheck {
    bool reduced = true;
    std::optional<Move> witness;
};

/// Reduced iff no product sits against a thin level and none of the
/// proposer's destabilize / unperturb / undo-removable certificates applies.
ReducedCheck is_reduced(const Complex& c, const MoveProposer& proposer);

}  // namespace widthcalc

#endif
