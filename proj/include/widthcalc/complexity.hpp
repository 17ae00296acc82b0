#ifndef WIDTHCALC_COMPLEXITY_HPP
#define WIDTHCALC_COMPLEXITY_HPP

#include "widthcalc/model.hpp"

#include <set>
#include <string>
#include <vector>

namespace widthcalc {

/// Thick levels as nodes, one edge per thin level, pointing along the flow.
struct ThickDigraph {
    struct Edge {
        std::string from;  ///< thick id whose upper cb the thin level leaves
        std::string to;    ///< thick id whose lower cb it enters
        std::string thin;
    };
    std::vector<std::string> nodes;
    std::vector<Edge> edges;

    std::vector<std::string> successors(const std::string& id) const;
    std::vector<std::string> predecessors(const std::string& id) const;
    bool is_acyclic() const;
    /// Thick ids on some directed cycle (including self-loops).
    std::set<std::string> on_cycle() const;
};

/// Builds the digraph from whichever thin levels resolve to two thick levels.
ThickDigraph thick_digraph(const Complex& c);

/// {H} plus every thick level reachable from H along flow lines.
std::set<std::string> reach_up(const Complex& c, const std::string& thick);
/// {H} plus every thick level from which H is reachable.
std::set<std::string> reach_down(const Complex& c, const std::string& thick);

int index_up(const Complex& c, const std::string& thick);
int index_down(const Complex& c, const std::string& thick);

/// Non-increasing sequence of non-negative even integers, ordered
/// lexicographically with shorter-is-smaller on a common prefix.
class ComplexityVector {
public:
    ComplexityVector() = default;
    /// Sorts the terms into non-increasing order.
    explicit ComplexityVector(std::vector<int> terms);

    const std::vector<int>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    int sum() const;
    /// Copy without the term at position i.
    ComplexityVector without(std::size_t i) const;
    std::string to_string() const;

    bool operator==(const ComplexityVector&) const = default;

private:
    std::vector<int> terms_;
};

enum class Order { LT, EQ, GT };
const char* to_string(Order o);

/// Lexicographic comparison, the shorter vector padded with -1.
Order compare(const ComplexityVector& a, const ComplexityVector& b);

struct ThickIndexRow {
    std::string id;
    int mu_up = 0;
    int mu_down = 0;
    int index_up = 0;
    int index_down = 0;
    int total() const { return index_up + index_down; }
};

/// Per-thick-level table, in the complex's thick-level order.
std::vector<ThickIndexRow> index_table(const Complex& c);

ComplexityVector complexity(const Complex& c);

/// Reverses every transverse orientation: upper and lower swap on each
/// thick level and each thin level flows the other way.
Complex reversed(const Complex& c);

}  // namespace widthcalc

#endif
