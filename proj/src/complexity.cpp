#include "widthcalc/complexity.hpp"
#include "widthcalc/index.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace widthcalc {

std::vector<std::string> ThickDigraph::successors(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& e : edges)
        if (e.from == id) out.push_back(e.to);
    return out;
}

std::vector<std::string> ThickDigraph::predecessors(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& e : edges)
        if (e.to == id) out.push_back(e.from);
    return out;
}

std::set<std::string> ThickDigraph::on_cycle() const {
    // Tarjan SCC; a node is on a cycle if its component has >1 node or a self-loop.
    std::map<std::string, int> index, low;
    std::map<std::string, bool> on_stack;
    std::vector<std::string> stack;
    std::set<std::string> result;
    int counter = 0;

    std::function<void(const std::string&)> strong = [&](const std::string& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (const auto& w : successors(v)) {
            if (!index.contains(w)) {
                strong(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::string> comp;
            std::string w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            if (comp.size() > 1) result.insert(comp.begin(), comp.end());
        }
    };
    for (const auto& n : nodes)
        if (!index.contains(n)) strong(n);
    for (const auto& e : edges)
        if (e.from == e.to) result.insert(e.from);
    return result;
}

bool ThickDigraph::is_acyclic() const { return on_cycle().empty(); }

ThickDigraph thick_digraph(const Complex& c) {
    ThickDigraph g;
    for (const auto& h : c.thick) g.nodes.push_back(h.id);
    for (const auto& t : c.thin) {
        auto* from = c.find_cb(t.from_cb);
        auto* to = c.find_cb(t.to_cb);
        if (!from || !to || !c.find_thick(from->plus) || !c.find_thick(to->plus)) continue;
        g.edges.push_back({from->plus, to->plus, t.id});
    }
    return g;
}

namespace {

std::set<std::string> reach(const Complex& c, const std::string& start, bool forward) {
    if (!c.find_thick(start)) throw std::invalid_argument("unknown thick level " + start);
    auto g = thick_digraph(c);
    std::set<std::string> seen{start};
    std::vector<std::string> todo{start};
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (const auto& w : forward ? g.successors(v) : g.predecessors(v))
            if (seen.insert(w).second) todo.push_back(w);
    }
    return seen;
}

int aggregated_index(const Complex& c, const std::set<std::string>& levels, Side side) {
    int total = 6 - 6 * static_cast<int>(levels.size());
    for (const auto& id : levels) {
        const auto* cb = c.cb_on(*c.find_thick(id), side);
        if (!cb) throw std::invalid_argument("thick level " + id + " has no " + to_string(side) + " cb");
        total += mu(*cb, c);
    }
    return total;
}

}  // namespace

std::set<std::string> reach_up(const Complex& c, const std::string& thick) { return reach(c, thick, true); }
std::set<std::string> reach_down(const Complex& c, const std::string& thick) { return reach(c, thick, false); }

int index_up(const Complex& c, const std::string& thick) {
    return aggregated_index(c, reach_up(c, thick), Side::Upper);
}

int index_down(const Complex& c, const std::string& thick) {
    return aggregated_index(c, reach_down(c, thick), Side::Lower);
}

ComplexityVector::ComplexityVector(std::vector<int> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

int ComplexityVector::sum() const {
    int s = 0;
    for (int t : terms_) s += t;
    return s;
}

ComplexityVector ComplexityVector::without(std::size_t i) const {
    auto t = terms_;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
    return ComplexityVector(std::move(t));
}

std::string ComplexityVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < terms_.size(); ++i) os << (i ? "," : "") << terms_[i];
    os << ')';
    return os.str();
}

const char* to_string(Order o) {
    switch (o) {
        case Order::LT: return "LT";
        case Order::EQ: return "EQ";
        case Order::GT: return "GT";
    }
    return "?";
}

Order compare(const ComplexityVector& a, const ComplexityVector& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    auto n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        int u = i < x.size() ? x[i] : -1;
        int v = i < y.size() ? y[i] : -1;
        if (u < v) return Order::LT;
        if (u > v) return Order::GT;
    }
    return Order::EQ;
}

std::vector<ThickIndexRow> index_table(const Complex& c) {
    std::vector<ThickIndexRow> rows;
    for (const auto& h : c.thick) {
        ThickIndexRow r;
        r.id = h.id;
        r.mu_up = mu(*c.cb_on(h, Side::Upper), c);
        r.mu_down = mu(*c.cb_on(h, Side::Lower), c);
        r.index_up = index_up(c, h.id);
        r.index_down = index_down(c, h.id);
        rows.push_back(r);
    }
    return rows;
}

ComplexityVector complexity(const Complex& c) {
    std::vector<int> terms;
    for (const auto& row : index_table(c)) terms.push_back(row.total());
    return ComplexityVector(std::move(terms));
}

Complex reversed(const Complex& c) {
    Complex r = c;
    for (auto& h : r.thick) std::swap(h.upper_cb, h.lower_cb);
    for (auto& t : r.thin) std::swap(t.from_cb, t.to_cb);
    return r;
}

}  // namespace widthcalc
