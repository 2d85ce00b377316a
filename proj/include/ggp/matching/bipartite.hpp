#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ggp/core/coord.hpp"

namespace ggp {

struct BipartiteGraph {
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    std::vector<std::vector<std::size_t>> adjacency;  // left -> right neighbours

    BipartiteGraph() = default;
    BipartiteGraph(std::size_t left, std::size_t right)
        : left_count(left), right_count(right), adjacency(left) {}

    void add_edge(std::size_t l, std::size_t r) {
        if (l >= left_count || r >= right_count) throw Error("bipartite edge out of range");
        auto& row = adjacency[l];
        if (std::find(row.begin(), row.end(), r) == row.end()) row.push_back(r);
    }

    bool has_edge(std::size_t l, std::size_t r) const {
        if (l >= left_count) return false;
        const auto& row = adjacency[l];
        return std::find(row.begin(), row.end(), r) != row.end();
    }
};

struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted by left index

    std::size_t size() const { return pairs.size(); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

inline bool is_valid_matching(const BipartiteGraph& g, const Matching& m) {
    std::set<std::size_t> ls, rs;
    for (auto [l, r] : m.pairs) {
        if (!g.has_edge(l, r)) return false;
        if (!ls.insert(l).second || !rs.insert(r).second) return false;
    }
    return true;
}

inline bool covers(const Matching& m, const std::set<std::size_t>& left,
                   const std::set<std::size_t>& right) {
    std::set<std::size_t> ls, rs;
    for (auto [l, r] : m.pairs) {
        ls.insert(l);
        rs.insert(r);
    }
    return std::includes(ls.begin(), ls.end(), left.begin(), left.end()) &&
           std::includes(rs.begin(), rs.end(), right.begin(), right.end());
}

namespace detail {

inline constexpr std::size_t kFree = static_cast<std::size_t>(-1);

/// Kuhn's augmenting paths; only left vertices in `lefts` and right vertices
/// with allowed_right[r] take part. Returns match_of_left.
inline std::vector<std::size_t> augmenting_matching(const BipartiteGraph& g,
                                                    const std::vector<std::size_t>& lefts,
                                                    const std::vector<bool>& allowed_right) {
    std::vector<std::size_t> match_left(g.left_count, kFree);
    std::vector<std::size_t> match_right(g.right_count, kFree);
    std::vector<char> seen(g.right_count);

    auto augment = [&](auto&& self, std::size_t l) -> bool {
        for (std::size_t r : g.adjacency[l]) {
            if (!allowed_right[r] || seen[r]) continue;
            seen[r] = 1;
            if (match_right[r] == kFree || self(self, match_right[r])) {
                match_left[l] = r;
                match_right[r] = l;
                return true;
            }
        }
        return false;
    };
    for (std::size_t l : lefts) {
        std::fill(seen.begin(), seen.end(), 0);
        augment(augment, l);
    }
    return match_left;
}

inline Matching to_matching(const std::vector<std::size_t>& match_left) {
    Matching m;
    for (std::size_t l = 0; l < match_left.size(); ++l)
        if (match_left[l] != kFree) m.pairs.emplace_back(l, match_left[l]);
    return m;
}

inline BipartiteGraph transpose(const BipartiteGraph& g) {
    BipartiteGraph t(g.right_count, g.left_count);
    for (std::size_t l = 0; l < g.left_count; ++l)
        for (std::size_t r : g.adjacency[l]) t.adjacency[r].push_back(l);
    return t;
}

}  // namespace detail

/// Maximum-cardinality matching by augmenting paths.
inline Matching max_matching(const BipartiteGraph& g) {
    std::vector<std::size_t> lefts(g.left_count);
    for (std::size_t l = 0; l < g.left_count; ++l) lefts[l] = l;
    return detail::to_matching(
        detail::augmenting_matching(g, lefts, std::vector<bool>(g.right_count, true)));
}

/// A matching covering every vertex of required_left and of required_right, if
/// one exists. One matching saturating each side is computed separately; their
/// union splits into alternating paths and cycles, and on each component one of
/// the two is kept so that no required vertex is lost.
inline std::optional<Matching> has_saturating_matching(const BipartiteGraph& g,
                                                       const std::set<std::size_t>& required_left,
                                                       const std::set<std::size_t>& required_right) {
    using detail::kFree;
    for (auto l : required_left)
        if (l >= g.left_count) throw Error("required left vertex out of range");
    for (auto r : required_right)
        if (r >= g.right_count) throw Error("required right vertex out of range");

    const std::vector<std::size_t> req_l(required_left.begin(), required_left.end());
    const auto m1_left =
        detail::augmenting_matching(g, req_l, std::vector<bool>(g.right_count, true));
    for (auto l : req_l)
        if (m1_left[l] == kFree) return std::nullopt;

    const auto gt = detail::transpose(g);
    const std::vector<std::size_t> req_r(required_right.begin(), required_right.end());
    const auto m2_right =
        detail::augmenting_matching(gt, req_r, std::vector<bool>(g.left_count, true));
    for (auto r : req_r)
        if (m2_right[r] == kFree) return std::nullopt;

    std::vector<std::size_t> m1_right(g.right_count, kFree), m2_left(g.left_count, kFree);
    for (std::size_t l = 0; l < g.left_count; ++l)
        if (m1_left[l] != kFree) m1_right[m1_left[l]] = l;
    for (std::size_t r = 0; r < g.right_count; ++r)
        if (m2_right[r] != kFree) m2_left[m2_right[r]] = r;

    // Vertices 0..L-1 are left, L..L+R-1 are right.
    const std::size_t L = g.left_count;
    const std::size_t n = L + g.right_count;
    std::vector<char> visited(n, 0);
    Matching out;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> component{start};
        visited[start] = 1;
        for (std::size_t k = 0; k < component.size(); ++k) {
            const std::size_t v = component[k];
            std::size_t nbrs[2];
            if (v < L) {
                nbrs[0] = m1_left[v] == kFree ? kFree : L + m1_left[v];
                nbrs[1] = m2_left[v] == kFree ? kFree : L + m2_left[v];
            } else {
                nbrs[0] = m1_right[v - L];
                nbrs[1] = m2_right[v - L];
            }
            for (std::size_t w : nbrs)
                if (w != kFree && !visited[w]) {
                    visited[w] = 1;
                    component.push_back(w);
                }
        }
        bool need_first = false, need_second = false;
        for (std::size_t v : component) {
            if (v < L) {
                if (m2_left[v] == kFree && required_left.count(v)) need_first = true;
            } else {
                const std::size_t r = v - L;
                if (m1_right[r] == kFree && required_right.count(r)) need_second = true;
            }
        }
        if (need_first && need_second)
            throw Error("internal: alternating component needs both matchings");
        for (std::size_t v : component) {
            if (v >= L) continue;
            const std::size_t r = need_second ? m2_left[v] : m1_left[v];
            if (r != kFree) out.pairs.emplace_back(v, r);
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

namespace detail {
inline void check_brute_force_size(const BipartiteGraph& g) {
    if (g.left_count + g.right_count > 16)
        throw Error("brute-force matching is limited to 16 vertices");
}

/// Visits every matching (including the empty one).
template <class Visit>
void for_each_matching(const BipartiteGraph& g, Visit&& visit) {
    std::vector<char> used(g.right_count, 0);
    Matching current;
    auto rec = [&](auto&& self, std::size_t l) -> void {
        if (l == g.left_count) {
            visit(current);
            return;
        }
        self(self, l + 1);
        for (std::size_t r : g.adjacency[l]) {
            if (used[r]) continue;
            used[r] = 1;
            current.pairs.emplace_back(l, r);
            self(self, l + 1);
            current.pairs.pop_back();
            used[r] = 0;
        }
    };
    rec(rec, 0);
}
}  // namespace detail

/// Exhaustive oracle: does some matching cover both required sets?
inline bool brute_force_matching(const BipartiteGraph& g, const std::set<std::size_t>& required_left,
                                 const std::set<std::size_t>& required_right) {
    detail::check_brute_force_size(g);
    bool found = false;
    detail::for_each_matching(g, [&](const Matching& m) {
        if (!found && covers(m, required_left, required_right)) found = true;
    });
    return found;
}

/// Exhaustive oracle for the maximum matching size.
inline std::size_t brute_force_max_matching_size(const BipartiteGraph& g) {
    detail::check_brute_force_size(g);
    std::size_t best = 0;
    detail::for_each_matching(g, [&](const Matching& m) { best = std::max(best, m.size()); });
    return best;
}

}  // namespace ggp
