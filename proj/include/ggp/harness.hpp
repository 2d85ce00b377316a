#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ggp/codec.hpp"

namespace ggp {

/// Bounds for the enumerations behind every property suite.
struct RangeSpec {
    int max_a = 3;
    int max_b = 3;
    int max_factors = 2;
    std::vector<CuspidalLabel> labels{CuspidalLabel{"rho", 1, "rho"}};
    Coord window_lo = -2;
    Coord window_hi = 2;
    int max_weight = 0;            // bound on a + b; 0 means unbounded
    int random_instances = 500;    // matching-oracle only
    std::uint64_t seed = 20240607;

    void validate() const {
        if (max_a < 1 || max_b < 1 || max_factors < 1) throw Error("range bounds must be >= 1");
        if (window_hi < window_lo) throw Error("coordinate window is empty");
        LabelSet check(labels);
        (void)check;
    }
    LabelSet label_set() const { return LabelSet(labels); }
};

struct SuiteFailure {
    Json instance;
    Json expected;
    Json got;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t instances = 0;
    std::uint64_t failure_count = 0;
    std::vector<SuiteFailure> failures;  // first kMaxStoredFailures only
    double wall_seconds = 0;
    std::uint64_t seed = 0;

    static constexpr std::size_t kMaxStoredFailures = 50;
    bool pass() const { return failure_count == 0; }
};

inline Json to_json(const SuiteReport& r) {
    Json fails = Json::array();
    for (const auto& f : r.failures)
        fails.push_back(Json{{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
    return Json{{"suite", r.suite},       {"pass", r.pass()},
                {"instances", r.instances}, {"failure_count", r.failure_count},
                {"failures", fails},      {"wall_seconds", r.wall_seconds},
                {"seed", r.seed}};
}

/// Appends one JSON object per line. A single writer owns the stream.
class JsonlWriter {
public:
    explicit JsonlWriter(const std::string& path) : path_(path), out_(path, std::ios::app) {
        if (!out_) throw Error("cannot open " + path + " for appending");
    }
    void write(const Json& record) {
        out_ << record.dump() << '\n';
        if (!out_) throw Error("write failed on " + path_);
        ++count_;
    }
    std::uint64_t flush() {
        out_.flush();
        if (!out_) throw Error("flush failed on " + path_);
        return count_;
    }
    std::uint64_t count() const { return count_; }

private:
    std::string path_;
    std::ofstream out_;
    std::uint64_t count_ = 0;
};

inline std::uint64_t persist_jsonl(const std::string& path, const std::vector<Json>& records) {
    JsonlWriter w(path);
    for (const auto& r : records) w.write(r);
    return w.flush();
}

// --- enumerators -----------------------------------------------------------

/// All (label, a, b, c): labels in order, then a, b, c ascending.
inline std::vector<QuasiSpehParams> enumerate_quasi_speh(const RangeSpec& r) {
    std::vector<QuasiSpehParams> out;
    for (const auto& l : r.labels)
        for (int a = 1; a <= r.max_a; ++a)
            for (int b = 1; b <= r.max_b; ++b) {
                if (r.max_weight > 0 && a + b > r.max_weight) continue;
                for (int c = 0; c <= a; ++c) out.push_back({l.id, a, b, c});
            }
    return out;
}

inline std::vector<SpehParams> enumerate_speh(const RangeSpec& r) {
    std::vector<SpehParams> out;
    for (const auto& l : r.labels)
        for (int a = 1; a <= r.max_a; ++a)
            for (int b = 1; b <= r.max_b; ++b) {
                if (r.max_weight > 0 && a + b > r.max_weight) continue;
                out.push_back({l.id, a, b});
            }
    return out;
}

/// Multisets of size 0..max_size drawn from `items`, as non-decreasing index
/// tuples, in lexicographic order by size.
template <class T>
std::vector<std::vector<T>> enumerate_multisets(const std::vector<T>& items, int max_size) {
    std::vector<std::vector<T>> out;
    std::vector<std::size_t> idx;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        std::vector<T> cur;
        for (auto k : idx) cur.push_back(items[k]);
        out.push_back(std::move(cur));
        if (left == 0) return;
        for (std::size_t k = from; k < items.size(); ++k) {
            idx.push_back(k);
            self(self, k, left - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, max_size);
    return out;
}

/// Arthur parameters with up to max_factors Speh factors from enumerate_speh.
inline std::vector<ArthurParams> enumerate_arthur(const RangeSpec& r) {
    std::vector<ArthurParams> out;
    for (auto& fs : enumerate_multisets(enumerate_speh(r), r.max_factors))
        out.push_back(ArthurParams{std::move(fs)});
    return out;
}

/// Segments on `label` with endpoints in the window, coordinates on the 1/2 grid.
inline std::vector<Segment> enumerate_segments(const RangeSpec& r, const std::string& label) {
    std::vector<Segment> out;
    for (Coord lo = r.window_lo; lo <= r.window_hi; lo += half())
        for (Coord hi = lo; hi <= r.window_hi; hi += 1) out.emplace_back(label, lo, hi);
    return out;
}

// --- suites ----------------------------------------------------------------

namespace detail {

class SuiteRun {
public:
    SuiteRun(std::string name, std::uint64_t seed, JsonlWriter* writer) : writer_(writer) {
        report_.suite = std::move(name);
        report_.seed = seed;
    }

    /// Records one instance. `expected` and `got` are only stored on failure.
    void check(bool ok, const std::function<Json()>& instance, const Json& expected = true,
               const Json& got = false) {
        ++report_.instances;
        if (!ok) {
            ++report_.failure_count;
            if (report_.failures.size() < SuiteReport::kMaxStoredFailures)
                report_.failures.push_back({instance(), expected, got});
        }
        if (writer_)
            writer_->write(Json{{"suite", report_.suite},
                                {"instance", instance()},
                                {"outcome", ok ? "pass" : "fail"}});
    }

    SuiteReport finish(double seconds) {
        report_.wall_seconds = seconds;
        return std::move(report_);
    }

private:
    SuiteReport report_;
    JsonlWriter* writer_;
};

inline Json graph_json(const BipartiteGraph& g) {
    Json edges = Json::array();
    for (std::size_t l = 0; l < g.left_count; ++l)
        for (auto r : g.adjacency[l]) edges.push_back(Json::array({l, r}));
    return Json{{"left", g.left_count}, {"right", g.right_count}, {"edges", edges}};
}

inline void suite_involutions(const RangeSpec& r, SuiteRun& run) {
    const LabelSet labels = r.label_set();
    for (const auto& l : r.labels) {
        const auto segs = enumerate_segments(r, l.id);
        for (const auto& d1 : segs)
            for (const auto& d2 : segs) {
                const bool ok = !precedes(d1, d1) && !(precedes(d1, d2) && precedes(d2, d1));
                run.check(ok, [&] { return Json{{"precedes", {to_json(d1), to_json(d2)}}}; });
            }

        for (const auto& list : enumerate_multisets(segs, r.max_factors)) {
            const Multisegment m(list);
            auto inst = [&] { return Json{{"multisegment", to_json(m)}}; };
            bool ok = dual(dual(m, labels), labels) == m && bang(bang(m)) == m;
            for (const Coord s : {half(), Coord(1), Coord(-3, 2)})
                ok = ok && shift(shift(m, s), -s) == m;
            if (labels.self_dual(l.id)) ok = ok && dual(m, labels) == bang(m);

            const auto sd = sym_decompose(m);
            ok = ok && sd.symmetric + sd.rest == m && bang(sd.symmetric) == sd.symmetric;
            // Maximality: every bang-stable sub-multisegment lies inside m_s.
            const auto& v = m.segments();
            for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
                Multisegment sub;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (mask >> i & 1) sub.add(v[i]);
                if (bang(sub) == sub && !sd.symmetric.contains(sub)) ok = false;
            }
            for (const auto& d : sd.rest)
                if (bang(d) == d || sd.rest.count(bang(d)) > 0) ok = false;

            const Coord ce = central_exponent(m, labels);
            ok = ok && ce + central_exponent(bang(m), labels) == Coord(0);
            if (!m.empty()) {
                const Multisegment head{m[0]};
                ok = ok && ce == central_exponent(head, labels) +
                                     central_exponent(m - head, labels);
            }
            run.check(ok, inst);
        }

        for (int a = 1; a <= r.max_a; ++a)
            for (int b = 1; b <= r.max_b; ++b) {
                const auto full = quasi_speh_multisegment({l.id, a, b, a});
                bool ok = full == speh_multisegment({l.id, a, b});
                if (b >= 2)
                    ok = ok && quasi_speh_multisegment({l.id, a, b, 0}) ==
                                   shift(speh_multisegment({l.id, a, b - 1}), -half());
                run.check(ok, [&] { return Json{{"quasi_identity", to_json(SpehParams{l.id, a, b})}}; });
            }

        for (int a = 1; a <= r.max_a; ++a)
            for (int c = 0; c <= a; ++c) {
                Coord closed = 0;
                for (int i = 1; i <= c; ++i) closed += Coord(a + 1, 2) - i;
                closed *= l.degree;
                const Coord got = central_exponent(quasi_speh_multisegment({l.id, a, 1, c}), labels);
                run.check(got == closed,
                          [&] { return Json{{"exponent", to_json(QuasiSpehParams{l.id, a, 1, c})}}; },
                          to_string(closed), to_string(got));
            }
    }
}

inline void suite_matching_oracle(const RangeSpec& r, SuiteRun& run) {
    std::mt19937_64 rng(r.seed);
    std::uniform_int_distribution<int> side(0, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 0; n < r.random_instances; ++n) {
        BipartiteGraph g(side(rng), side(rng));
        const double p = unit(rng);
        for (std::size_t l = 0; l < g.left_count; ++l)
            for (std::size_t rr = 0; rr < g.right_count; ++rr)
                if (unit(rng) < p) g.add_edge(l, rr);
        std::set<std::size_t> req_l, req_r;
        const double q = unit(rng);
        for (std::size_t l = 0; l < g.left_count; ++l)
            if (unit(rng) < q) req_l.insert(l);
        for (std::size_t rr = 0; rr < g.right_count; ++rr)
            if (unit(rng) < q) req_r.insert(rr);

        const auto mm = max_matching(g);
        const auto best = brute_force_max_matching_size(g);
        const auto sat = has_saturating_matching(g, req_l, req_r);
        const bool oracle = brute_force_matching(g, req_l, req_r);
        bool ok = is_valid_matching(g, mm) && mm.size() == best && sat.has_value() == oracle;
        if (sat) ok = ok && is_valid_matching(g, *sat) && covers(*sat, req_l, req_r);
        run.check(
            ok,
            [&] {
                return Json{{"graph", graph_json(g)},
                            {"required_left", req_l},
                            {"required_right", req_r}};
            },
            Json{{"max", best}, {"saturating", oracle}},
            Json{{"max", mm.size()}, {"saturating", sat.has_value()}});
    }
}

inline void suite_prop_replace(const RangeSpec& r, SuiteRun& run) {
    for (const auto& l : r.labels) {
        RangeSpec one = r;
        one.labels = {l};
        const auto qs = enumerate_quasi_speh(one);
        for (const auto& p : qs)
            for (const auto& q : qs) {
                if (!quasi_speh_leq(q, p)) continue;
                const bool ok =
                    lm_socle_is_sum(quasi_speh_multisegment(p), quasi_speh_multisegment(q));
                run.check(ok, [&] { return Json{{"p", to_json(p)}, {"q", to_json(q)}}; });
            }
    }
}

inline void suite_lmlem(const RangeSpec& r, SuiteRun& run) {
    const auto ss = enumerate_speh(r);
    for (const auto& p : ss)
        for (const auto& q : ss)
            run.check(speh_halfshift_irreducible(p, q),
                      [&] { return Json{{"p", to_json(p)}, {"q", to_json(q)}}; });
}

/// Pairs (A, B) of Arthur parameters on the first label, rank(A) = rank(B) + 1.
template <class Body>
void for_each_branching_pair(const RangeSpec& r, Body&& body) {
    const LabelSet labels = r.label_set();
    RangeSpec one = r;
    one.labels = {r.labels.front()};
    if (!labels.self_dual(one.labels.front().id))
        throw Error("branching suites run on a self-dual label");
    const auto all = enumerate_arthur(one);
    std::vector<std::int64_t> ranks;
    for (const auto& A : all) ranks.push_back(gl_rank(A, labels));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (ranks[i] == ranks[j] + 1) body(all[i], all[j], labels);
}

inline bool derivative_match_holds(const ArthurParams& A, const ArthurParams& B,
                                   const DerivativeMatch& d, const LabelSet& labels) {
    Multisegment lhs, rhs;
    for (std::size_t i = 0; i < A.factors.size(); ++i) {
        const auto& f = A.factors[i];
        lhs += quasi_speh_multisegment({f.label, f.a, f.b, d.c_a.at(i)});
    }
    for (std::size_t j = 0; j < B.factors.size(); ++j) {
        const auto& f = B.factors[j];
        rhs += quasi_speh_multisegment({labels.dual(f.label), f.a, f.b, d.c_b.at(j)});
    }
    return shift(lhs, half()) == dual(rhs, labels);
}

inline void suite_thm_deri(const RangeSpec& r, SuiteRun& run) {
    for_each_branching_pair(r, [&](const ArthurParams& A, const ArthurParams& B, const LabelSet& ls) {
        const auto d = exists_derivative_match(A, B, ls);
        const auto w = ggp_position(A, B);
        bool ok = true;
        if (d) ok = derivative_match_holds(A, B, *d, ls) && w && is_valid_witness(A, B, *w);
        run.check(ok, [&] { return Json{{"A", to_json(A)}, {"B", to_json(B)}}; },
                  "derivative match implies GGP position",
                  Json{{"derivative_match", d.has_value()}, {"ggp", w.has_value()}});
    });
}

inline void suite_indeed_quo(const RangeSpec& r, SuiteRun& run) {
    for_each_branching_pair(r, [&](const ArthurParams& A, const ArthurParams& B, const LabelSet& ls) {
        const auto w = ggp_position(A, B);
        const auto d = exists_derivative_match(A, B, ls);
        bool ok = true;
        if (w) ok = d && derivative_match_holds(A, B, *d, ls);
        run.check(ok, [&] { return Json{{"A", to_json(A)}, {"B", to_json(B)}}; },
                  "GGP position implies a derivative match",
                  Json{{"derivative_match", d.has_value()}, {"ggp", w.has_value()}});
    });
}

/// Builds pi from a split, inverts it back to quasi-Speh data and asks
/// seg_lem_decompose to recover a split; also checks that pi = L(m + m' nu^{-1/2})
/// with m, m' of Arthur type.
inline void suite_cor_main(const RangeSpec& r, SuiteRun& run) {
    const LabelSet labels = r.label_set();
    for (const auto& l : r.labels) {
        std::vector<std::pair<int, int>> ab;
        for (int a = 1; a <= r.max_a; ++a)
            for (int b = 1; b <= r.max_b; ++b) ab.emplace_back(a, b);
        for (const auto& shape : enumerate_multisets(ab, r.max_factors)) {
            const std::size_t k = shape.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                std::vector<QuasiSpehParams> q;
                SegLemSplit split;
                for (std::size_t i = 0; i < k; ++i) {
                    const auto [a, b] = shape[i];
                    const bool plus = mask >> i & 1;
                    (plus ? split.plus : split.minus).push_back(i);
                    q.push_back({l.id, a, b, plus ? a : 0});
                }
                const std::string target_label = labels.dual(l.id);
                const Multisegment pi = seg_lem_shape(q, split, target_label);
                Multisegment bar;
                for (const auto& p : q) bar += quasi_speh_multisegment(p);
                bool ok = dual(shift(pi, half()), labels) == bar;

                const auto found = seg_lem_decompose(q, labels);
                ok = ok && found && seg_lem_shape(q, *found, target_label) == pi;
                if (found) {
                    Multisegment arthur_part, shifted_part;
                    for (auto i : found->minus)
                        if (q[i].b > 1)
                            arthur_part += speh_multisegment({target_label, q[i].a, q[i].b - 1});
                    for (auto i : found->plus)
                        shifted_part += speh_multisegment({target_label, q[i].a, q[i].b});
                    ok = ok && arthur_factorize(arthur_part) && arthur_factorize(shifted_part) &&
                         arthur_part + shift(shifted_part, -half()) == pi;
                }
                Json qj = Json::array();
                for (const auto& p : q) qj.push_back(to_json(p));
                run.check(ok, [&] { return Json{{"quasi", qj}, {"split", to_json(split)}}; },
                          to_json(split), found ? to_json(*found) : Json(nullptr));
            }
        }
    }
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"prop-replace", "lmlem",           "thm-deri",
                                                "indeed-quo",   "cor-main",        "matching-oracle",
                                                "involutions"};
    return names;
}

/// Runs a named property suite over the range. When `jsonl_path` is set every
/// instance and its outcome is appended there as one line.
inline SuiteReport run_suite(const std::string& name, const RangeSpec& r,
                             const std::optional<std::string>& jsonl_path = std::nullopt) {
    r.validate();
    std::optional<JsonlWriter> writer;
    if (jsonl_path) writer.emplace(*jsonl_path);
    detail::SuiteRun run(name, r.seed, writer ? &*writer : nullptr);
    const auto start = std::chrono::steady_clock::now();

    if (name == "involutions") detail::suite_involutions(r, run);
    else if (name == "matching-oracle") detail::suite_matching_oracle(r, run);
    else if (name == "prop-replace") detail::suite_prop_replace(r, run);
    else if (name == "lmlem") detail::suite_lmlem(r, run);
    else if (name == "thm-deri") detail::suite_thm_deri(r, run);
    else if (name == "indeed-quo") detail::suite_indeed_quo(r, run);
    else if (name == "cor-main") detail::suite_cor_main(r, run);
    else throw Error("unknown suite \"" + name + "\"");

    if (writer) writer->flush();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    return run.finish(dt.count());
}

}  // namespace ggp
