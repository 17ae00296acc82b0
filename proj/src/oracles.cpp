#include "widthcalc/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace widthcalc::oracle {

namespace {

// thick id -> thick ids one thin level away, following or against the flow
std::map<std::string, std::vector<std::string>> neighbours(const Complex& c, bool forward) {
    std::map<std::string, std::string> owner;  // cb id -> thick id
    for (const auto& h : c.thick) {
        owner[h.upper_cb] = h.id;
        owner[h.lower_cb] = h.id;
    }
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& t : c.thin) {
        const auto& a = owner[t.from_cb];
        const auto& b = owner[t.to_cb];
        if (forward) out[a].push_back(b);
        else out[b].push_back(a);
    }
    return out;
}

std::set<std::string> paths(const Complex& c, const std::string& start, bool forward) {
    auto nb = neighbours(c, forward);
    std::set<std::string> hit{start};
    std::vector<std::string> path{start};
    std::function<void()> extend = [&] {
        for (const auto& w : nb[path.back()]) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            hit.insert(w);
            path.push_back(w);
            extend();
            path.pop_back();
        }
    };
    extend();
    return hit;
}

}  // namespace

std::set<std::string> reach_up_paths(const Complex& c, const std::string& start) { return paths(c, start, true); }
std::set<std::string> reach_down_paths(const Complex& c, const std::string& start) { return paths(c, start, false); }

Order compare_padded(std::vector<int> a, std::vector<int> b) {
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    auto n = std::max(a.size(), b.size());
    a.resize(n, -1);
    b.resize(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? Order::LT : Order::GT;
    }
    return Order::EQ;
}

int mu_closed_form(const Surface& plus, const std::vector<Surface>& minus, const TangleSummary& t) {
    int g = 0;
    for (const auto& s : minus) g += s.genus;
    return 6 * (plus.genus - g) + 6 * static_cast<int>(minus.size()) + 4 * (t.bridges - t.ghosts);
}

Complex relabel(const Complex& c, Rng& rng) {
    std::map<std::string, std::string> name;
    std::vector<std::string> ids;
    for (const auto& h : c.thick) ids.push_back(h.id);
    for (const auto& t : c.thin) ids.push_back(t.id);
    for (const auto& b : c.boundary) ids.push_back(b.id);
    for (const auto& cb : c.cbs) ids.push_back(cb.id);
    std::vector<int> perm(ids.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < ids.size(); ++i) name[ids[i]] = "x" + std::to_string(perm[i]) + "_" + std::to_string(rng() % 1000);
    auto n = [&](const std::string& s) { return name.contains(s) ? name[s] : s; };

    Complex r = c;
    for (auto& h : r.thick) {
        h.id = n(h.id);
        h.upper_cb = n(h.upper_cb);
        h.lower_cb = n(h.lower_cb);
    }
    for (auto& t : r.thin) {
        t.id = n(t.id);
        t.from_cb = n(t.from_cb);
        t.to_cb = n(t.to_cb);
    }
    for (auto& b : r.boundary) {
        b.id = n(b.id);
        b.owner = n(b.owner);
    }
    for (auto& cb : r.cbs) {
        cb.id = n(cb.id);
        cb.plus = n(cb.plus);
        for (auto& p : cb.minus) p = n(p);
        std::shuffle(cb.minus.begin(), cb.minus.end(), rng);
    }
    std::shuffle(r.thick.begin(), r.thick.end(), rng);
    std::shuffle(r.thin.begin(), r.thin.end(), rng);
    std::shuffle(r.boundary.begin(), r.boundary.end(), rng);
    std::shuffle(r.cbs.begin(), r.cbs.end(), rng);
    return r;
}

bool has_cycle(const Complex& c) {
    auto nb = neighbours(c, true);
    std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
    std::function<bool(const std::string&)> dfs = [&](const std::string& v) {
        state[v] = 1;
        for (const auto& w : nb[v]) {
            if (state[w] == 1) return true;
            if (state[w] == 0 && dfs(w)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (const auto& h : c.thick)
        if (state[h.id] == 0 && dfs(h.id)) return true;
    return false;
}

}  // namespace widthcalc::oracle
