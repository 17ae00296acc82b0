#ifndef WIDTHCALC_MODEL_HPP
#define WIDTHCALC_MODEL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace widthcalc {

/// Closed connected orientable surface, summarised by genus and the number
/// of points where the graph punctures it.
struct Surface {
    int genus = 0;
    int punctures = 0;

    auto operator<=>(const Surface&) const = default;
};

int euler_char(const Surface& s);

inline bool is_sphere(const Surface& s) { return s.genus == 0; }

/// Counts of the four tangle piece types inside a drilled compressionbody.
struct TangleSummary {
    int verticals = 0;
    int bridges = 0;
    int ghosts = 0;
    int loops = 0;

    auto operator<=>(const TangleSummary&) const = default;
    TangleSummary operator+(const TangleSummary& o) const {
        return {verticals + o.verticals, bridges + o.bridges, ghosts + o.ghosts, loops + o.loops};
    }
    TangleSummary operator-(const TangleSummary& o) const {
        return {verticals - o.verticals, bridges - o.bridges, ghosts - o.ghosts, loops - o.loops};
    }
};

enum class Side { Upper, Lower };

inline Side opposite(Side s) { return s == Side::Upper ? Side::Lower : Side::Upper; }
const char* to_string(Side s);

struct ThickLevel {
    std::string id;
    Surface surface;
    std::string upper_cb;
    std::string lower_cb;

    bool operator==(const ThickLevel&) const = default;
};

// Orientation points out of from_cb (an upper compressionbody) and into
// to_cb (a lower compressionbody).
struct ThinLevel {
    std::string id;
    Surface surface;
    std::string from_cb;
    std::string to_cb;

    bool operator==(const ThinLevel&) const = default;
};

struct BoundaryLevel {
    std::string id;
    Surface surface;
    std::string owner;
    bool drilled_vertex = false;

    bool operator==(const BoundaryLevel&) const = default;
};

struct Compressionbody {
    std::string id;
    std::string plus;                ///< thick level id
    std::vector<std::string> minus;  ///< thin or boundary level ids
    TangleSummary tangle;
    bool product = false;
    bool ball = false;

    bool operator==(const Compressionbody&) const = default;
};

/// An oriented multiple v.p.-bridge surface in drilled form, stored as flat
/// record lists. Records refer to each other by string id; nothing is
/// assumed to resolve until validate() says so.
struct Complex {
    std::vector<ThickLevel> thick;
    std::vector<ThinLevel> thin;
    std::vector<BoundaryLevel> boundary;
    std::vector<Compressionbody> cbs;

    // Lifts the "no boundary sphere meeting T at most twice" hypothesis, for
    // reducible examples such as two punctured balls glued along a sphere.
    bool allow_small_boundary_spheres = false;

    const ThickLevel* find_thick(const std::string& id) const;
    const ThinLevel* find_thin(const std::string& id) const;
    const BoundaryLevel* find_boundary(const std::string& id) const;
    const Compressionbody* find_cb(const std::string& id) const;
    ThickLevel* find_thick(const std::string& id);
    ThinLevel* find_thin(const std::string& id);
    BoundaryLevel* find_boundary(const std::string& id);
    Compressionbody* find_cb(const std::string& id);

    /// Surface of a thin or boundary port, if the id names one.
    std::optional<Surface> port_surface(const std::string& id) const;
    bool has_id(const std::string& id) const;
    /// An id of the form prefix, prefix1, prefix2, ... not yet in use.
    std::string fresh_id(const std::string& prefix) const;

    /// Which side of its thick level the compressionbody sits on.
    std::optional<Side> side_of(const Compressionbody& cb) const;
    const Compressionbody* cb_on(const ThickLevel& h, Side s) const;

    void erase_thick(const std::string& id);
    void erase_thin(const std::string& id);
    void erase_boundary(const std::string& id);
    void erase_cb(const std::string& id);

    bool operator==(const Complex&) const = default;
};

/// Surface of a compressionbody's positive boundary.
Surface plus_surface(const Complex& c, const Compressionbody& cb);
/// Negative boundary surfaces, in port order; unresolved ports are skipped.
std::vector<Surface> minus_surfaces(const Complex& c, const Compressionbody& cb);

}  // namespace widthcalc

#endif
