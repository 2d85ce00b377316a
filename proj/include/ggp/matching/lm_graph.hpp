#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ggp/core/multisegment.hpp"
#include "ggp/matching/bipartite.hpp"

namespace ggp {

/// (i, j): row i of the first ladder against row j of the second, 1-based,
/// rows numbered by decreasing hi.
using LadderIndex = std::pair<int, int>;

struct LmGraph {
    std::vector<LadderIndex> x;
    std::vector<LadderIndex> y;
    std::vector<std::pair<LadderIndex, LadderIndex>> edges;
    friend bool operator==(const LmGraph&, const LmGraph&) = default;
};

/// (i1,j1) <-> (i2,j2) iff (i1 = i2 and j2 = j1 + 1) or (j1 = j2 and i2 = i1 - 1).
inline bool lm_related(const LadderIndex& from, const LadderIndex& to) {
    return (from.first == to.first && to.second == from.second + 1) ||
           (from.second == to.second && to.first == from.first - 1);
}

inline void require_ladder(const Multisegment& m, const char* what) {
    single_label(m);
    if (!is_proper_ladder(m)) throw Error(std::string(what) + " is not a proper ladder");
}

inline LmGraph build_lm_graph(const Multisegment& m1, const Multisegment& m2) {
    require_ladder(m1, "first multisegment");
    require_ladder(m2, "second multisegment");
    const auto rows1 = ladder_order(m1);
    const auto rows2 = ladder_order(m2);
    LmGraph g;
    for (std::size_t i = 0; i < rows1.size(); ++i)
        for (std::size_t j = 0; j < rows2.size(); ++j) {
            const LadderIndex idx{static_cast<int>(i + 1), static_cast<int>(j + 1)};
            if (precedes(rows1[i], rows2[j])) g.x.push_back(idx);
            if (precedes(rows1[i], step_right(rows2[j]))) g.y.push_back(idx);
        }
    for (const auto& from : g.x)
        for (const auto& to : g.y)
            if (lm_related(from, to)) g.edges.emplace_back(from, to);
    return g;
}

/// X nodes on the left, Y nodes on the right, in the order stored in g.
inline BipartiteGraph to_bipartite(const LmGraph& g) {
    BipartiteGraph b(g.x.size(), g.y.size());
    for (const auto& [from, to] : g.edges) {
        const auto l = std::find(g.x.begin(), g.x.end(), from) - g.x.begin();
        const auto r = std::find(g.y.begin(), g.y.end(), to) - g.y.begin();
        b.add_edge(static_cast<std::size_t>(l), static_cast<std::size_t>(r));
    }
    return b;
}

struct LmCheck {
    bool socle_is_sum = false;
    LmGraph graph;
    std::optional<Matching> matching;  // X -> Y, indices into graph.x / graph.y
};

/// Whether Z(m1 + m2) is the socle of Z(m1) x Z(m2): an injective X -> Y along
/// <-> exists. Inputs on different lines never interact and pass trivially.
inline LmCheck lm_socle_check(const Multisegment& m1, const Multisegment& m2) {
    LmCheck out;
    out.graph = build_lm_graph(m1, m2);
    std::set<std::size_t> all_x;
    for (std::size_t k = 0; k < out.graph.x.size(); ++k) all_x.insert(k);
    out.matching = has_saturating_matching(to_bipartite(out.graph), all_x, {});
    out.socle_is_sum = out.matching.has_value();
    return out;
}

inline bool lm_socle_is_sum(const Multisegment& m1, const Multisegment& m2) {
    return lm_socle_check(m1, m2).socle_is_sum;
}

/// Unique-quotient check for Z(m1) x Z(m2), via socle/cosocle reversal.
inline bool lm_cosocle_is_sum(const Multisegment& m1, const Multisegment& m2) {
    return lm_socle_is_sum(m2, m1);
}

}  // namespace ggp
