#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 the rewritten comparison candidates make boost's mixed
// rational/integer comparisons recurse forever (boost 1.74). Exact-match
// non-template overloads win overload resolution and compare as rationals.
namespace boost {
#define GGP_RATIONAL_INT_COMPARE(T)                                                              \
    inline bool operator==(const rational<std::int64_t>& a, T b) {                              \
        return a == rational<std::int64_t>(b);                                                  \
    }                                                                                           \
    inline bool operator<(const rational<std::int64_t>& a, T b) {                               \
        return a < rational<std::int64_t>(b);                                                   \
    }                                                                                           \
    inline bool operator>(const rational<std::int64_t>& a, T b) {                               \
        return rational<std::int64_t>(b) < a;                                                   \
    }                                                                                           \
    inline bool operator<=(const rational<std::int64_t>& a, T b) { return !(a > b); }           \
    inline bool operator>=(const rational<std::int64_t>& a, T b) { return !(a < b); }           \
    inline bool operator<(T b, const rational<std::int64_t>& a) { return a > b; }               \
    inline bool operator>(T b, const rational<std::int64_t>& a) { return a < b; }               \
    inline bool operator<=(T b, const rational<std::int64_t>& a) { return !(a < b); }           \
    inline bool operator>=(T b, const rational<std::int64_t>& a) { return !(a > b); }
GGP_RATIONAL_INT_COMPARE(int)
GGP_RATIONAL_INT_COMPARE(long)
GGP_RATIONAL_INT_COMPARE(long long)
#undef GGP_RATIONAL_INT_COMPARE
}  // namespace boost

namespace ggp {

/// Raised for any violated precondition or malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact exponent of an unramified twist nu^s. Only the real part is modelled.
using Coord = boost::rational<std::int64_t>;

inline bool is_integer(const Coord& c) { return c.denominator() == 1; }

inline std::int64_t to_integer(const Coord& c) {
    if (!is_integer(c)) throw Error("coordinate is not an integer");
    return c.numerator();
}

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_string(const Coord& c) {
    if (is_integer(c)) return std::to_string(c.numerator());
    return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

namespace detail {
inline std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error("malformed rational \"" + std::string(whole) + "\"");
    return v;
}
}  // namespace detail

/// Accepts "p" or "p/q" with optional surrounding whitespace.
inline Coord parse_coord(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Coord(detail::parse_int(s, text));
    const auto num = detail::parse_int(s.substr(0, slash), text);
    const auto den = detail::parse_int(s.substr(slash + 1), text);
    if (den == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
    return Coord(num, den);
}

inline Coord half() { return Coord(1, 2); }

}  // namespace ggp
