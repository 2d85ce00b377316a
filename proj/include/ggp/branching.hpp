#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ggp/matching/bipartite.hpp"
#include "ggp/matching/lm_graph.hpp"
#include "ggp/speh.hpp"

namespace ggp {

/// Certificate for GGP position. Indices are 0-based positions in A.factors and
/// B.factors. matched_up pairs have b' = b + 1, matched_down pairs b' = b - 1.
struct GgpWitness {
    std::vector<std::pair<std::size_t, std::size_t>> matched_up;
    std::vector<std::pair<std::size_t, std::size_t>> matched_down;
    std::vector<std::size_t> unmatched_a;
    std::vector<std::size_t> unmatched_b;
    friend bool operator==(const GgpWitness&, const GgpWitness&) = default;
};

inline bool ggp_compatible(const SpehParams& f, const SpehParams& g) {
    return f.label == g.label && f.a == g.a && std::abs(f.b - g.b) == 1;
}

/// Checks every condition of the GGP-position definition against A and B.
inline bool is_valid_witness(const ArthurParams& A, const ArthurParams& B, const GgpWitness& w) {
    std::vector<int> seen_a(A.factors.size()), seen_b(B.factors.size());
    auto mark = [](std::vector<int>& seen, std::size_t i) {
        if (i >= seen.size() || seen[i]) return false;
        seen[i] = 1;
        return true;
    };
    for (auto [i, j] : w.matched_up) {
        if (!mark(seen_a, i) || !mark(seen_b, j)) return false;
        const auto &f = A.factors[i], &g = B.factors[j];
        if (f.label != g.label || f.a != g.a || g.b != f.b + 1) return false;
    }
    for (auto [i, j] : w.matched_down) {
        if (!mark(seen_a, i) || !mark(seen_b, j)) return false;
        const auto &f = A.factors[i], &g = B.factors[j];
        if (f.label != g.label || f.a != g.a || g.b != f.b - 1) return false;
    }
    for (auto i : w.unmatched_a)
        if (!mark(seen_a, i) || A.factors[i].b != 1) return false;
    for (auto j : w.unmatched_b)
        if (!mark(seen_b, j) || B.factors[j].b != 1) return false;
    return std::all_of(seen_a.begin(), seen_a.end(), [](int s) { return s == 1; }) &&
           std::all_of(seen_b.begin(), seen_b.end(), [](int s) { return s == 1; });
}

/// Decides GGP position. Edges join factors with equal label, equal a and
/// |b - b'| = 1; every factor with b >= 2 must be matched, the rest may stay
/// unmatched. No size relation between A and B is assumed.
inline std::optional<GgpWitness> ggp_position(const ArthurParams& A, const ArthurParams& B) {
    const auto& fa = A.factors;
    const auto& fb = B.factors;
    BipartiteGraph g(fa.size(), fb.size());
    std::set<std::size_t> req_a, req_b;
    for (std::size_t i = 0; i < fa.size(); ++i) {
        validate(fa[i]);
        if (fa[i].b >= 2) req_a.insert(i);
        for (std::size_t j = 0; j < fb.size(); ++j)
            if (ggp_compatible(fa[i], fb[j])) g.add_edge(i, j);
    }
    for (std::size_t j = 0; j < fb.size(); ++j) {
        validate(fb[j]);
        if (fb[j].b >= 2) req_b.insert(j);
    }
    const auto m = has_saturating_matching(g, req_a, req_b);
    if (!m) return std::nullopt;

    GgpWitness w;
    std::vector<char> used_a(fa.size()), used_b(fb.size());
    for (auto [i, j] : m->pairs) {
        (fb[j].b == fa[i].b + 1 ? w.matched_up : w.matched_down).emplace_back(i, j);
        used_a[i] = used_b[j] = 1;
    }
    for (std::size_t i = 0; i < fa.size(); ++i)
        if (!used_a[i]) w.unmatched_a.push_back(i);
    for (std::size_t j = 0; j < fb.size(); ++j)
        if (!used_b[j]) w.unmatched_b.push_back(j);
    return w;
}

/// c-values per factor (c_a[i] for A.factors[i], c_b[j] for B.factors[j]).
struct DerivativeMatch {
    std::vector<int> c_a;
    std::vector<int> c_b;
    friend bool operator==(const DerivativeMatch&, const DerivativeMatch&) = default;
};

namespace detail {

/// Enumerates c in [0, a] for each listed factor and reports the summed
/// multisegment together with the chosen c-values.
template <class Realize, class Visit>
void for_each_c_assignment(const std::vector<SpehParams>& factors, Realize&& realize,
                           Visit&& visit) {
    std::vector<int> cs(factors.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, const Multisegment& acc) -> void {
        if (idx == factors.size()) {
            visit(acc, cs);
            return;
        }
        for (int c = 0; c <= factors[idx].a; ++c) {
            cs[idx] = c;
            self(self, idx + 1, acc + realize(factors[idx], c));
        }
    };
    rec(rec, 0, Multisegment{});
}

}  // namespace detail

/// Searches c-values with
///   shift(sum_A m^{a,b,c}_rho, 1/2) = dual(sum_B m^{a',b',c'}_{rho dual}).
/// Lines are independent, so each label is solved on its own; within a line
/// the A-side sums are indexed and every B-side sum is looked up.
inline std::optional<DerivativeMatch> exists_derivative_match(const ArthurParams& A,
                                                              const ArthurParams& B,
                                                              const LabelSet& labels) {
    DerivativeMatch out;
    out.c_a.assign(A.factors.size(), 0);
    out.c_b.assign(B.factors.size(), 0);

    std::set<std::string> lines;
    for (const auto& f : A.factors) lines.insert(f.label);
    for (const auto& f : B.factors) lines.insert(f.label);

    for (const auto& line : lines) {
        std::vector<std::size_t> ia, ib;
        std::vector<SpehParams> fa, fb;
        for (std::size_t i = 0; i < A.factors.size(); ++i)
            if (A.factors[i].label == line) {
                ia.push_back(i);
                fa.push_back(A.factors[i]);
            }
        for (std::size_t j = 0; j < B.factors.size(); ++j)
            if (B.factors[j].label == line) {
                ib.push_back(j);
                fb.push_back(B.factors[j]);
            }

        std::map<Multisegment, std::vector<int>> a_side;
        detail::for_each_c_assignment(
            fa,
            [](const SpehParams& f, int c) {
                return shift(quasi_speh_multisegment({f.label, f.a, f.b, c}), half());
            },
            [&](const Multisegment& m, const std::vector<int>& cs) { a_side.emplace(m, cs); });

        std::optional<std::pair<std::vector<int>, std::vector<int>>> hit;
        detail::for_each_c_assignment(
            fb,
            [&](const SpehParams& f, int c) {
                return dual(quasi_speh_multisegment({labels.dual(f.label), f.a, f.b, c}), labels);
            },
            [&](const Multisegment& m, const std::vector<int>& cs) {
                if (hit) return;
                auto it = a_side.find(m);
                if (it != a_side.end()) hit.emplace(it->second, cs);
            });
        if (!hit) return std::nullopt;
        for (std::size_t k = 0; k < ia.size(); ++k) out.c_a[ia[k]] = hit->first[k];
        for (std::size_t k = 0; k < ib.size(); ++k) out.c_b[ib[k]] = hit->second[k];
    }
    return out;
}

/// Indices into the quasi-Speh list, 0-based.
struct SegLemSplit {
    std::vector<std::size_t> minus;
    std::vector<std::size_t> plus;
    friend bool operator==(const SegLemSplit&, const SegLemSplit&) = default;
};

/// sum_{minus} m^{a,b-1} + sum_{plus} m^{a,b+1,0}, on `label`. m^{a,0} is empty.
inline Multisegment seg_lem_shape(const std::vector<QuasiSpehParams>& q, const SegLemSplit& split,
                                  const std::string& label) {
    Multisegment m;
    for (auto i : split.minus)
        if (q.at(i).b > 1) m += speh_multisegment({label, q[i].a, q[i].b - 1});
    for (auto i : split.plus) m += quasi_speh_multisegment({label, q.at(i).a, q[i].b + 1, 0});
    return m;
}

/// Given pi-bar = L(sum m^{a_i,b_i,c_i}_rho), finds a split of the factors such
/// that pi = nu^{-1/2} (pi-bar)^vee has the Arthur-shaped parameter
/// sum_{minus} m^{a,b-1}_{rho dual} + sum_{plus} m^{a,b+1,0}_{rho dual}.
inline std::optional<SegLemSplit> seg_lem_decompose(const std::vector<QuasiSpehParams>& q,
                                                    const LabelSet& labels) {
    if (q.size() > 20) throw Error("seg_lem_decompose: too many factors");
    std::set<std::string> ls;
    Multisegment bar;
    for (const auto& p : q) {
        ls.insert(p.label);
        bar += quasi_speh_multisegment(p);
    }
    if (ls.size() > 1) throw Error("seg_lem_decompose: factors mix cuspidal labels");
    if (q.empty()) return SegLemSplit{};
    const std::string target_label = labels.dual(*ls.begin());
    const Multisegment target = shift(dual(bar, labels), -half());

    const std::size_t k = q.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        SegLemSplit split;
        for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? split.plus : split.minus).push_back(i);
        if (seg_lem_shape(q, split, target_label) == target) return split;
    }
    return std::nullopt;
}

/// The tuple has the expected unique quotient iff every ordered pair i < j does.
inline bool cyclic_tuple(const std::vector<Multisegment>& ms) {
    for (const auto& m : ms) require_ladder(m, "tuple entry");
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (!lm_cosocle_is_sum(ms[i], ms[j])) return false;
    return true;
}

enum class VerdictTag { HomZero, HomNonzero, ConjecturedNonzero };

inline const char* to_string(VerdictTag t) {
    switch (t) {
    case VerdictTag::HomZero: return "HomZero";
    case VerdictTag::HomNonzero: return "HomNonzero";
    case VerdictTag::ConjecturedNonzero: return "ConjecturedNonzero";
    }
    return "?";
}

struct Verdict {
    VerdictTag tag = VerdictTag::HomZero;
    std::string reason;
    std::optional<GgpWitness> witness;
};

namespace reasons {
inline constexpr const char* kNotGgp =
    "not in GGP position; a nonzero restriction Hom forces GGP position";
inline constexpr const char* kGeneric =
    "in GGP position with a generic side; GGP position suffices when one side is generic";
inline constexpr const char* kConjectural =
    "in GGP position, neither side generic; nonvanishing is conjectural";
}  // namespace reasons

/// Verdict for Hom_{GL_{n-1}}(pi(A)|, pi(B)); requires rank(A) = rank(B) + 1.
inline Verdict branching_verdict(const ArthurParams& A, const ArthurParams& B,
                                 const LabelSet& labels) {
    const auto na = gl_rank(A, labels);
    const auto nb = gl_rank(B, labels);
    if (na != nb + 1)
        throw Error("branching needs rank(A) = rank(B) + 1 (got " + std::to_string(na) + " and " +
                    std::to_string(nb) + ")");
    Verdict v;
    v.witness = ggp_position(A, B);
    if (!v.witness) {
        v.tag = VerdictTag::HomZero;
        v.reason = reasons::kNotGgp;
    } else if (is_generic(A) || is_generic(B)) {
        v.tag = VerdictTag::HomNonzero;
        v.reason = reasons::kGeneric;
    } else {
        v.tag = VerdictTag::ConjecturedNonzero;
        v.reason = reasons::kConjectural;
    }
    return v;
}

/// Necessary conditions for Hom(pi|, sigma) != 0 between unitarizable pi, sigma.
/// Indices in failures are 0-based positions in U1.comps / U2.comps.
struct UnitaryReport {
    bool arthur0_in_ggp = false;                                  // item 1
    std::vector<std::pair<std::size_t, std::size_t>> shared_not_ggp;  // item 2
    std::vector<std::size_t> unshared_first_not_generic;          // item 3
    std::vector<std::size_t> unshared_second_not_generic;         // item 4

    bool pass() const {
        return arthur0_in_ggp && shared_not_ggp.empty() && unshared_first_not_generic.empty() &&
               unshared_second_not_generic.empty();
    }
};

inline UnitaryReport unitary_branching_necessary(const UnitaryParams& u1, const UnitaryParams& u2,
                                                 const LabelSet& labels) {
    validate(u1);
    validate(u2);
    const auto n1 = gl_rank(u1, labels);
    const auto n2 = gl_rank(u2, labels);
    if (n1 != n2 + 1)
        throw Error("branching needs rank(U1) = rank(U2) + 1 (got " + std::to_string(n1) +
                    " and " + std::to_string(n2) + ")");
    UnitaryReport r;
    r.arthur0_in_ggp = ggp_position(u1.arthur0, u2.arthur0).has_value();
    for (std::size_t i = 0; i < u1.comps.size(); ++i) {
        bool shared = false;
        for (std::size_t j = 0; j < u2.comps.size(); ++j) {
            if (u1.comps[i].alpha != u2.comps[j].alpha) continue;
            shared = true;
            if (!ggp_position(u1.comps[i].arthur, u2.comps[j].arthur))
                r.shared_not_ggp.emplace_back(i, j);
        }
        if (!shared && !is_generic(u1.comps[i].arthur)) r.unshared_first_not_generic.push_back(i);
    }
    for (std::size_t j = 0; j < u2.comps.size(); ++j) {
        const bool shared = std::any_of(u1.comps.begin(), u1.comps.end(),
                                        [&](const UnitaryComponent& c) {
                                            return c.alpha == u2.comps[j].alpha;
                                        });
        if (!shared && !is_generic(u2.comps[j].arthur)) r.unshared_second_not_generic.push_back(j);
    }
    return r;
}

/// L(sum m^{a_i,b_i,c_i}), the unique quotient of the product taken in
/// decreasing preorder.
inline Multisegment quasi_arthur_quotient(const std::vector<QuasiSpehParams>& ps) {
    std::set<std::string> ls;
    for (const auto& p : ps) ls.insert(p.label);
    if (ls.size() > 1) throw Error("quasi_arthur_quotient: factors mix cuspidal labels");
    auto sorted = ps;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& p, const auto& q) {
        return quasi_speh_leq(q, p) && !quasi_speh_leq(p, q);
    });
    Multisegment m;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && !quasi_speh_leq(sorted[i], sorted[i - 1]))
            throw Error("internal: quasi-Speh factors admit no decreasing order");
        m += quasi_speh_multisegment(sorted[i]);
    }
    return m;
}

/// Supports of nu^{1/2} speh(p) and speh(q) as segments; the product is
/// irreducible when neither precedes the other.
inline std::pair<Segment, Segment> halfshift_supports(const SpehParams& p, const SpehParams& q) {
    const int s1 = p.a + p.b;
    const int s2 = q.a + q.b;
    return {Segment(p.label, Coord(-(s1 - 3), 2), Coord(s1 - 1, 2)),
            Segment(q.label, Coord(-(s2 - 2), 2), Coord(s2 - 2, 2))};
}

inline bool speh_halfshift_irreducible(const SpehParams& p, const SpehParams& q) {
    validate(p);
    validate(q);
    if (p.label != q.label) return true;
    const auto [s1, s2] = halfshift_supports(p, q);
    return !precedes(s1, s2) && !precedes(s2, s1);
}

}  // namespace ggp
