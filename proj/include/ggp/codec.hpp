#pragma once

// JSON interchange format. Rationals are strings ("p" or "p/q"); witness and
// report indices are written 1-based, matching ladder-row numbering.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ggp/branching.hpp"

namespace ggp {

using Json = nlohmann::ordered_json;

/// A decode failure, carrying a JSON-pointer-like path to the offending field.
class DecodeError : public Error {
public:
    DecodeError(std::string path, const std::string& what)
        : Error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

namespace codec {

inline std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string at(const std::string& path, std::size_t i) {
    return path + "/" + std::to_string(i);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw DecodeError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw DecodeError(at(path, key), "missing field");
    return *it;
}

inline const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw DecodeError(path, "expected an array");
    return j;
}

inline std::string string_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_string()) throw DecodeError(at(path, key), "expected a string");
    return v.get<std::string>();
}

inline int int_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number_integer()) throw DecodeError(at(path, key), "expected an integer");
    return v.get<int>();
}

inline Coord decode_coord(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Coord(j.get<std::int64_t>());
    if (!j.is_string()) throw DecodeError(path, "expected a rational string \"p/q\"");
    try {
        return parse_coord(j.get<std::string>());
    } catch (const Error& e) {
        throw DecodeError(path, e.what());
    }
}

inline Json encode(const Coord& c) { return to_string(c); }

}  // namespace codec

// --- core -------------------------------------------------------------------

inline Json to_json(const Segment& s) {
    return Json{{"label", s.label()}, {"lo", to_string(s.lo())}, {"hi", to_string(s.hi())}};
}

inline Segment segment_from_json(const Json& j, const std::string& path = "") {
    const auto label = codec::string_field(j, "label", path);
    const auto lo = codec::decode_coord(codec::field(j, "lo", path), codec::at(path, "lo"));
    const auto hi = codec::decode_coord(codec::field(j, "hi", path), codec::at(path, "hi"));
    try {
        return Segment(label, lo, hi);
    } catch (const DecodeError&) {
        throw;
    } catch (const Error& e) {
        throw DecodeError(path, e.what());
    }
}

inline Json to_json(const Multisegment& m) {
    Json out = Json::array();
    for (const auto& s : m) out.push_back(to_json(s));
    return out;
}

inline Multisegment multisegment_from_json(const Json& j, const std::string& path = "") {
    std::vector<Segment> segs;
    const Json& arr = codec::array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i)
        segs.push_back(segment_from_json(arr[i], codec::at(path, i)));
    return Multisegment(std::move(segs));
}

inline Json to_json(const CuspidalLabel& l) {
    return Json{{"id", l.id}, {"degree", l.degree}, {"dual", l.dual_id}};
}

inline LabelSet labels_from_json(const Json& j, const std::string& path = "") {
    std::vector<CuspidalLabel> out;
    const Json& arr = codec::array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto p = codec::at(path, i);
        CuspidalLabel l;
        l.id = codec::string_field(arr[i], "id", p);
        l.degree = codec::int_field(arr[i], "degree", p);
        l.dual_id = arr[i].contains("dual") ? codec::string_field(arr[i], "dual", p) : l.id;
        out.push_back(std::move(l));
    }
    try {
        return LabelSet(out);
    } catch (const Error& e) {
        throw DecodeError(path, e.what());
    }
}

// --- speh -------------------------------------------------------------------

inline Json to_json(const SpehParams& p) {
    return Json{{"label", p.label}, {"a", p.a}, {"b", p.b}};
}

inline Json to_json(const QuasiSpehParams& p) {
    return Json{{"label", p.label}, {"a", p.a}, {"b", p.b}, {"c", p.c}};
}

inline SpehParams speh_from_json(const Json& j, const std::string& path = "") {
    SpehParams p{codec::string_field(j, "label", path), codec::int_field(j, "a", path),
                 codec::int_field(j, "b", path)};
    if (p.a < 1) throw DecodeError(codec::at(path, "a"), "must be >= 1");
    if (p.b < 1) throw DecodeError(codec::at(path, "b"), "must be >= 1");
    return p;
}

inline QuasiSpehParams quasi_speh_from_json(const Json& j, const std::string& path = "") {
    const auto s = speh_from_json(j, path);
    QuasiSpehParams q{s.label, s.a, s.b, codec::int_field(j, "c", path)};
    if (q.c < 0 || q.c > q.a) throw DecodeError(codec::at(path, "c"), "must lie in [0, a]");
    return q;
}

inline Json to_json(const ArthurParams& A) {
    Json fs = Json::array();
    for (const auto& f : A.factors) fs.push_back(to_json(f));
    return Json{{"factors", fs}};
}

/// Accepts {"factors": [...]} or a bare array of factors.
inline ArthurParams arthur_from_json(const Json& j, const std::string& path = "") {
    const bool bare = j.is_array();
    const std::string fpath = bare ? path : codec::at(path, "factors");
    const Json& arr = codec::array(bare ? j : codec::field(j, "factors", path), fpath);
    ArthurParams A;
    for (std::size_t i = 0; i < arr.size(); ++i)
        A.factors.push_back(speh_from_json(arr[i], codec::at(fpath, i)));
    return A;
}

inline Json to_json(const UnitaryParams& u) {
    Json comps = Json::array();
    for (const auto& c : u.comps)
        comps.push_back(Json{{"arthur", to_json(c.arthur)}, {"alpha", to_string(c.alpha)}});
    return Json{{"arthur0", to_json(u.arthur0)}, {"comps", comps}};
}

inline UnitaryParams unitary_from_json(const Json& j, const std::string& path = "") {
    UnitaryParams u;
    u.arthur0 = arthur_from_json(codec::field(j, "arthur0", path), codec::at(path, "arthur0"));
    if (j.contains("comps")) {
        const auto cpath = codec::at(path, "comps");
        const Json& arr = codec::array(j.at("comps"), cpath);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto p = codec::at(cpath, i);
            UnitaryComponent c;
            c.arthur = arthur_from_json(codec::field(arr[i], "arthur", p), codec::at(p, "arthur"));
            const auto apath = codec::at(p, "alpha");
            c.alpha = codec::decode_coord(codec::field(arr[i], "alpha", p), apath);
            if (!(Coord(0) < c.alpha && c.alpha < half()))
                throw DecodeError(apath, "alpha must lie strictly between 0 and 1/2");
            for (const auto& prev : u.comps)
                if (prev.alpha == c.alpha) throw DecodeError(apath, "alpha repeated");
            u.comps.push_back(std::move(c));
        }
    }
    return u;
}

// --- matching ---------------------------------------------------------------

inline Json to_json(const LadderIndex& idx) { return Json::array({idx.first, idx.second}); }

inline Json to_json(const LmGraph& g) {
    Json x = Json::array(), y = Json::array(), e = Json::array();
    for (const auto& n : g.x) x.push_back(to_json(n));
    for (const auto& n : g.y) y.push_back(to_json(n));
    for (const auto& [from, to] : g.edges) e.push_back(Json::array({to_json(from), to_json(to)}));
    return Json{{"x", x}, {"y", y}, {"edges", e}};
}

inline LadderIndex ladder_index_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw DecodeError(path, "expected [i, j]");
    return {j[0].get<int>(), j[1].get<int>()};
}

inline LmGraph lm_graph_from_json(const Json& j, const std::string& path = "") {
    LmGraph g;
    auto nodes = [&](const char* key, std::vector<LadderIndex>& out) {
        const auto p = codec::at(path, key);
        const Json& arr = codec::array(codec::field(j, key, path), p);
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.push_back(ladder_index_from_json(arr[i], codec::at(p, i)));
    };
    nodes("x", g.x);
    nodes("y", g.y);
    const auto p = codec::at(path, "edges");
    const Json& arr = codec::array(codec::field(j, "edges", path), p);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto ep = codec::at(p, i);
        if (!arr[i].is_array() || arr[i].size() != 2) throw DecodeError(ep, "expected [x, y]");
        g.edges.emplace_back(ladder_index_from_json(arr[i][0], codec::at(ep, 0)),
                             ladder_index_from_json(arr[i][1], codec::at(ep, 1)));
    }
    return g;
}

// --- branching --------------------------------------------------------------

inline Json to_json(const GgpWitness& w) {
    auto pairs = [](const auto& v) {
        Json out = Json::array();
        for (auto [i, j] : v) out.push_back(Json::array({i + 1, j + 1}));
        return out;
    };
    auto singles = [](const auto& v) {
        Json out = Json::array();
        for (auto i : v) out.push_back(i + 1);
        return out;
    };
    return Json{{"matched_up", pairs(w.matched_up)},
                {"matched_down", pairs(w.matched_down)},
                {"unmatched_a", singles(w.unmatched_a)},
                {"unmatched_b", singles(w.unmatched_b)}};
}

inline GgpWitness witness_from_json(const Json& j, const std::string& path = "") {
    GgpWitness w;
    auto index = [](const Json& v, const std::string& p) -> std::size_t {
        if (!v.is_number_integer() || v.get<long long>() < 1)
            throw DecodeError(p, "expected a 1-based index");
        return static_cast<std::size_t>(v.get<long long>() - 1);
    };
    auto pairs = [&](const char* key, auto& out) {
        const auto p = codec::at(path, key);
        const Json& arr = codec::array(codec::field(j, key, path), p);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto ip = codec::at(p, i);
            if (!arr[i].is_array() || arr[i].size() != 2) throw DecodeError(ip, "expected [i, j]");
            out.emplace_back(index(arr[i][0], codec::at(ip, 0)), index(arr[i][1], codec::at(ip, 1)));
        }
    };
    auto singles = [&](const char* key, auto& out) {
        const auto p = codec::at(path, key);
        const Json& arr = codec::array(codec::field(j, key, path), p);
        for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(index(arr[i], codec::at(p, i)));
    };
    pairs("matched_up", w.matched_up);
    pairs("matched_down", w.matched_down);
    singles("unmatched_a", w.unmatched_a);
    singles("unmatched_b", w.unmatched_b);
    return w;
}

inline Json to_json(const Verdict& v) {
    return Json{{"tag", to_string(v.tag)},
                {"reason", v.reason},
                {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

inline Json to_json(const UnitaryReport& r) {
    Json item2 = Json::array(), item3 = Json::array(), item4 = Json::array();
    for (auto [i, j] : r.shared_not_ggp) item2.push_back(Json::array({i + 1, j + 1}));
    for (auto i : r.unshared_first_not_generic) item3.push_back(i + 1);
    for (auto j : r.unshared_second_not_generic) item4.push_back(j + 1);
    Json items = Json::array();
    items.push_back(Json{{"item", 1}, {"ok", r.arthur0_in_ggp}, {"failing", Json::array()}});
    items.push_back(Json{{"item", 2}, {"ok", r.shared_not_ggp.empty()}, {"failing", item2}});
    items.push_back(Json{{"item", 3}, {"ok", r.unshared_first_not_generic.empty()}, {"failing", item3}});
    items.push_back(Json{{"item", 4}, {"ok", r.unshared_second_not_generic.empty()}, {"failing", item4}});
    return Json{{"kind", "necessary conditions"}, {"pass", r.pass()}, {"items", items}};
}

inline Json to_json(const DerivativeMatch& d) {
    return Json{{"c_a", d.c_a}, {"c_b", d.c_b}};
}

inline Json to_json(const SegLemSplit& s) {
    Json minus = Json::array(), plus = Json::array();
    for (auto i : s.minus) minus.push_back(i + 1);
    for (auto i : s.plus) plus.push_back(i + 1);
    return Json{{"minus", minus}, {"plus", plus}};
}

}  // namespace ggp
