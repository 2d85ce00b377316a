#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ggp/core/label.hpp"
#include "ggp/core/segment.hpp"

namespace ggp {

/// A finite multiset of segments, kept sorted by (label, lo, hi).
class Multisegment {
public:
    Multisegment() = default;
    Multisegment(std::initializer_list<Segment> segs) : segs_(segs) { normalize(); }
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) { normalize(); }

    /// Adds [lo, hi] on `label`; the empty segment [a, a-1] is dropped.
    Multisegment& add_row(const std::string& label, Coord lo, Coord hi) {
        if (hi == lo - 1) return *this;
        return add(Segment(label, lo, hi));
    }

    Multisegment& add(const Segment& s) {
        segs_.insert(std::upper_bound(segs_.begin(), segs_.end(), s), s);
        return *this;
    }

    Multisegment& operator+=(const Multisegment& other) {
        std::vector<Segment> merged;
        merged.reserve(segs_.size() + other.segs_.size());
        std::merge(segs_.begin(), segs_.end(), other.segs_.begin(), other.segs_.end(),
                   std::back_inserter(merged));
        segs_ = std::move(merged);
        return *this;
    }

    friend Multisegment operator+(Multisegment a, const Multisegment& b) { return a += b; }

    /// Multiset difference; throws if `other` is not contained in *this.
    Multisegment& operator-=(const Multisegment& other) {
        if (!contains(other)) throw Error("multisegment removal would go negative");
        std::vector<Segment> rest;
        std::set_difference(segs_.begin(), segs_.end(), other.segs_.begin(), other.segs_.end(),
                            std::back_inserter(rest));
        segs_ = std::move(rest);
        return *this;
    }

    friend Multisegment operator-(Multisegment a, const Multisegment& b) { return a -= b; }

    bool contains(const Multisegment& other) const {
        return std::includes(segs_.begin(), segs_.end(), other.segs_.begin(), other.segs_.end());
    }

    std::size_t count(const Segment& s) const {
        auto [lo, hi] = std::equal_range(segs_.begin(), segs_.end(), s);
        return static_cast<std::size_t>(hi - lo);
    }

    std::size_t size() const { return segs_.size(); }
    bool empty() const { return segs_.empty(); }
    auto begin() const { return segs_.begin(); }
    auto end() const { return segs_.end(); }
    const std::vector<Segment>& segments() const { return segs_; }
    const Segment& operator[](std::size_t i) const { return segs_[i]; }

    std::set<std::string> labels() const {
        std::set<std::string> out;
        for (const auto& s : segs_) out.insert(s.label());
        return out;
    }

    /// The sub-multisegment living on `label`.
    Multisegment restrict_to(const std::string& label) const {
        std::vector<Segment> out;
        for (const auto& s : segs_)
            if (s.label() == label) out.push_back(s);
        return Multisegment(std::move(out));
    }

    friend bool operator==(const Multisegment& a, const Multisegment& b) {
        return a.segs_ == b.segs_;
    }
    friend bool operator!=(const Multisegment& a, const Multisegment& b) { return !(a == b); }
    friend bool operator<(const Multisegment& a, const Multisegment& b) {
        return std::lexicographical_compare(a.segs_.begin(), a.segs_.end(), b.segs_.begin(),
                                            b.segs_.end());
    }

private:
    void normalize() { std::sort(segs_.begin(), segs_.end()); }

    std::vector<Segment> segs_;
};

/// Every segment moved by s on the same label.
inline Multisegment shift(const Multisegment& m, const Coord& s) {
    std::vector<Segment> out;
    out.reserve(m.size());
    for (const auto& d : m) out.emplace_back(d.label(), d.lo() + s, d.hi() + s);
    return Multisegment(std::move(out));
}

/// Contragredient: [lo,hi]_rho -> [-hi,-lo]_{rho dual}.
inline Multisegment dual(const Multisegment& m, const LabelSet& labels) {
    std::vector<Segment> out;
    out.reserve(m.size());
    for (const auto& d : m) out.emplace_back(labels.dual(d.label()), -d.hi(), -d.lo());
    return Multisegment(std::move(out));
}

/// Reflection through zero on the same label: [lo,hi]_rho -> [-hi,-lo]_rho.
inline Multisegment bang(const Multisegment& m) {
    std::vector<Segment> out;
    out.reserve(m.size());
    for (const auto& d : m) out.emplace_back(d.label(), -d.hi(), -d.lo());
    return Multisegment(std::move(out));
}

inline Segment bang(const Segment& d) { return Segment(d.label(), -d.hi(), -d.lo()); }

/// The single label of m, nullopt for the empty multisegment; throws on mixed labels.
inline std::optional<std::string> single_label(const Multisegment& m) {
    const auto ls = m.labels();
    if (ls.empty()) return std::nullopt;
    if (ls.size() > 1) throw Error("multisegment mixes cuspidal labels");
    return *ls.begin();
}

struct SymDecomposition {
    Multisegment symmetric;  // m_s, fixed by bang and maximal
    Multisegment rest;       // m_a
};

/// m = m_s + m_a with bang(m_s) = m_s and m_s maximal.
inline SymDecomposition sym_decompose(const Multisegment& m) {
    single_label(m);
    SymDecomposition out;
    const auto& segs = m.segments();
    for (std::size_t i = 0; i < segs.size();) {
        std::size_t j = i;
        while (j < segs.size() && segs[j] == segs[i]) ++j;
        const Segment& d = segs[i];
        const std::size_t mult = j - i;
        const Segment mirror = bang(d);
        const std::size_t keep = mirror == d ? mult : std::min(mult, m.count(mirror));
        for (std::size_t k = 0; k < mult; ++k) (k < keep ? out.symmetric : out.rest).add(d);
        i = j;
    }
    return out;
}

/// Segments ordered by decreasing hi (ties broken by decreasing lo): Delta_1 is
/// the top row of a ladder.
inline std::vector<Segment> ladder_order(const Multisegment& m) {
    std::vector<Segment> out(m.begin(), m.end());
    std::stable_sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
        if (a.hi() != b.hi()) return b.hi() < a.hi();
        return b.lo() < a.lo();
    });
    return out;
}

/// Delta_k < ... < Delta_1 under `precedes`.
inline bool is_proper_ladder(const Multisegment& m) {
    const auto rows = ladder_order(m);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (!precedes(rows[i + 1], rows[i])) return false;
    return true;
}

/// Sum over segments of degree * (lo + (lo+1) + ... + hi).
inline Coord central_exponent(const Multisegment& m, const LabelSet& labels) {
    Coord total = 0;
    for (const auto& d : m) {
        const Coord len = d.length();
        total += Coord(labels.degree(d.label())) * len * (d.lo() + d.hi()) / 2;
    }
    return total;
}

/// The n of GL_n: sum of degree * length.
inline std::int64_t gl_rank(const Multisegment& m, const LabelSet& labels) {
    std::int64_t n = 0;
    for (const auto& d : m) n += labels.degree(d.label()) * d.length();
    return n;
}

}  // namespace ggp
