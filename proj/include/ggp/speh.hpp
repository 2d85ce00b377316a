#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggp/core/multisegment.hpp"

namespace ggp {

/// (rho, a, b): the Speh block attached to psi (x) V_a (x) V_b.
struct SpehParams {
    std::string label;
    int a = 1;
    int b = 1;
    auto operator<=>(const SpehParams&) const = default;
};

/// (rho, a, b, c) with 0 <= c <= a: a Speh ladder whose top row keeps only its
/// last c points.
struct QuasiSpehParams {
    std::string label;
    int a = 1;
    int b = 1;
    int c = 0;
    auto operator<=>(const QuasiSpehParams&) const = default;
};

/// An Arthur parameter: an unordered multiset of Speh blocks.
struct ArthurParams {
    std::vector<SpehParams> factors;
    friend bool operator==(const ArthurParams&, const ArthurParams&) = default;
};

struct UnitaryComponent {
    ArthurParams arthur;
    Coord alpha;
    friend bool operator==(const UnitaryComponent&, const UnitaryComponent&) = default;
};

/// pi_0 x pi_1(alpha_1) x ... x pi_k(alpha_k), with distinct 0 < alpha_i < 1/2.
struct UnitaryParams {
    ArthurParams arthur0;
    std::vector<UnitaryComponent> comps;
    friend bool operator==(const UnitaryParams&, const UnitaryParams&) = default;
};

enum class Side { right, left };

inline void validate(const SpehParams& p) {
    if (p.a < 1 || p.b < 1)
        throw Error("Speh parameters need a >= 1 and b >= 1 (got a=" + std::to_string(p.a) +
                    ", b=" + std::to_string(p.b) + ")");
}

inline void validate(const QuasiSpehParams& p) {
    if (p.a < 1 || p.b < 1) throw Error("quasi-Speh parameters need a >= 1 and b >= 1");
    if (p.c < 0 || p.c > p.a)
        throw Error("quasi-Speh parameter c=" + std::to_string(p.c) + " outside [0, a]");
}

inline void validate(const UnitaryParams& u) {
    for (std::size_t i = 0; i < u.comps.size(); ++i) {
        const Coord& al = u.comps[i].alpha;
        if (!(Coord(0) < al && al < half()))
            throw Error("alpha " + to_string(al) + " must lie strictly between 0 and 1/2");
        for (std::size_t j = 0; j < i; ++j)
            if (u.comps[j].alpha == al) throw Error("alpha " + to_string(al) + " repeated");
    }
}

/// sum_{i=1}^{b} [(b-a)/2 + 1 - i, (b+a)/2 - i].
inline Multisegment speh_multisegment(const SpehParams& p) {
    validate(p);
    Multisegment m;
    for (int i = 1; i <= p.b; ++i)
        m.add(Segment(p.label, Coord(p.b - p.a, 2) + 1 - i, Coord(p.b + p.a, 2) - i));
    return m;
}

/// Speh ladder whose top row is cut to [(b+a)/2 - c, (b+a)/2 - 1]; the row
/// disappears when c = 0.
inline Multisegment quasi_speh_multisegment(const QuasiSpehParams& p) {
    validate(p);
    Multisegment m;
    m.add_row(p.label, Coord(p.b + p.a, 2) - p.c, Coord(p.b + p.a, 2) - 1);
    for (int i = 2; i <= p.b; ++i)
        m.add(Segment(p.label, Coord(p.b - p.a, 2) + 1 - i, Coord(p.b + p.a, 2) - i));
    return m;
}

/// p <= q iff a_p + b_p < a_q + b_q, or equal sums and a_p <= a_q. Ignores c.
inline bool quasi_speh_leq(const QuasiSpehParams& p, const QuasiSpehParams& q) {
    if (p.label != q.label) throw Error("quasi-Speh preorder compares different labels");
    const int sp = p.a + p.b;
    const int sq = q.a + q.b;
    return sp < sq || (sp == sq && p.a <= q.a);
}

/// The i-th derivative of a Speh block: (a, b, a - k) when i = k * degree, 0 <= k <= a.
inline std::optional<QuasiSpehParams> speh_derivative(const SpehParams& p, int i,
                                                      const LabelSet& labels) {
    validate(p);
    const int d = labels.degree(p.label);
    if (i < 0 || i % d != 0) return std::nullopt;
    const int k = i / d;
    if (k > p.a) return std::nullopt;
    return QuasiSpehParams{p.label, p.a, p.b, p.a - k};
}

/// Constituents of the i-th derivative of a product of Speh blocks, one
/// quasi-Speh per factor (factor order preserved). For Side::left the label is
/// dualized before and after deriving, which returns the original label; use
/// constituent_multisegment to realize the reflected parameter.
inline std::set<std::vector<QuasiSpehParams>> derivative_constituents(const ArthurParams& A, int i,
                                                                      Side side,
                                                                      const LabelSet& labels) {
    std::set<std::vector<QuasiSpehParams>> out;
    if (i < 0) return out;
    std::vector<QuasiSpehParams> current;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx == A.factors.size()) {
            if (remaining == 0) out.insert(current);
            return;
        }
        SpehParams f = A.factors[idx];
        if (side == Side::left) f.label = labels.dual(f.label);
        const int d = labels.degree(f.label);
        for (int k = 0; k <= f.a && k * d <= remaining; ++k) {
            auto q = *speh_derivative(f, k * d, labels);
            if (side == Side::left) q.label = labels.dual(q.label);
            current.push_back(q);
            self(self, idx + 1, remaining - k * d);
            current.pop_back();
        }
    };
    rec(rec, 0, i);
    return out;
}

/// The Langlands parameter of a right or left derivative constituent.
inline Multisegment constituent_multisegment(const QuasiSpehParams& q, Side side,
                                             const LabelSet& labels) {
    if (side == Side::right) return quasi_speh_multisegment(q);
    QuasiSpehParams on_dual = q;
    on_dual.label = labels.dual(q.label);
    return dual(quasi_speh_multisegment(on_dual), labels);
}

inline Multisegment arthur_multisegment(const ArthurParams& A) {
    Multisegment m;
    for (const auto& f : A.factors) m += speh_multisegment(f);
    return m;
}

inline std::int64_t gl_rank(const ArthurParams& A, const LabelSet& labels) {
    std::int64_t n = 0;
    for (const auto& f : A.factors) {
        validate(f);
        n += static_cast<std::int64_t>(labels.degree(f.label)) * f.a * f.b;
    }
    return n;
}

inline Multisegment unitary_multisegment(const UnitaryParams& u) {
    validate(u);
    Multisegment m = arthur_multisegment(u.arthur0);
    for (const auto& c : u.comps) {
        const auto base = arthur_multisegment(c.arthur);
        m += shift(base, c.alpha);
        m += shift(base, -c.alpha);
    }
    return m;
}

inline std::int64_t gl_rank(const UnitaryParams& u, const LabelSet& labels) {
    std::int64_t n = gl_rank(u.arthur0, labels);
    for (const auto& c : u.comps) n += 2 * gl_rank(c.arthur, labels);
    return n;
}

inline bool is_generic(const ArthurParams& A) {
    return std::all_of(A.factors.begin(), A.factors.end(),
                       [](const SpehParams& f) { return f.b == 1; });
}

/// One block of a unitary factorization: speh(params) shifted by +offset and,
/// when offset != 0, also by -offset.
struct UnitaryBlock {
    SpehParams speh;
    Coord offset;
};

namespace detail {

inline const Segment& top_segment(const Multisegment& m) {
    return *std::max_element(m.begin(), m.end(), [](const Segment& x, const Segment& y) {
        return x.hi() < y.hi();
    });
}

/// Peels blocks off m, anchored at a segment of maximal hi. The anchor is the
/// top row of a block with offset t in [0, 1/2), and its coordinates determine
/// (a, b, t), so each level has at most one candidate; the recursion still
/// restores state on failure.
inline bool peel_blocks(Multisegment& m, bool allow_complementary, std::vector<UnitaryBlock>& out) {
    if (m.empty()) return true;
    const Segment anchor = top_segment(m);
    const int a = static_cast<int>(anchor.length());
    const Coord twice_lo = anchor.lo() * 2;
    std::int64_t shift_steps = twice_lo.numerator() / twice_lo.denominator();
    if (Coord(shift_steps) > twice_lo) --shift_steps;  // floor for negative values
    const std::int64_t b = a + shift_steps;
    if (b < 1) return false;
    const Coord t = anchor.lo() - Coord(shift_steps, 2);
    if (t != Coord(0) && !allow_complementary) return false;

    SpehParams block{anchor.label(), a, static_cast<int>(b)};
    const Multisegment centered = speh_multisegment(block);
    Multisegment piece = shift(centered, t);
    if (t != Coord(0)) piece += shift(centered, -t);
    if (!m.contains(piece)) return false;
    m -= piece;
    out.push_back({block, t});
    if (peel_blocks(m, allow_complementary, out)) return true;
    out.pop_back();
    m += piece;
    return false;
}

}  // namespace detail

/// A multiset of Speh parameters re-summing to m, if m is of Arthur type.
inline std::optional<std::vector<SpehParams>> arthur_factorize(const Multisegment& m) {
    Multisegment rest = m;
    std::vector<UnitaryBlock> blocks;
    if (!detail::peel_blocks(rest, false, blocks)) return std::nullopt;
    std::vector<SpehParams> out;
    for (const auto& blk : blocks) out.push_back(blk.speh);
    std::sort(out.begin(), out.end());
    return out;
}

/// Blocks of m in the monoid generated by centered Speh multisegments and
/// complementary pairs shift(speh, t) + shift(speh, -t), 0 < t < 1/2.
inline std::optional<std::vector<UnitaryBlock>> unitary_blocks(const Multisegment& m) {
    Multisegment rest = m;
    std::vector<UnitaryBlock> blocks;
    if (!detail::peel_blocks(rest, true, blocks)) return std::nullopt;
    return blocks;
}

inline bool is_unitarizable(const Multisegment& m) { return unitary_blocks(m).has_value(); }

}  // namespace ggp
