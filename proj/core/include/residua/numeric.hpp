#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace residua {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// boost::rational's mixed-type ==/!= against built-in integers break under
// C++20: the reversed-candidate rules make the (integer, rational) template
// the best match for its own body, which recurses until the stack is gone.
// These overloads are more specialized, so they win resolution and terminate.
template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
inline bool operator==(const Rat& a, I b) { return a == Rat(Int(b)); }
template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
inline bool operator==(I b, const Rat& a) { return a == Rat(Int(b)); }
template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
inline bool operator!=(const Rat& a, I b) { return !(a == Rat(Int(b))); }
template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
inline bool operator!=(I b, const Rat& a) { return !(a == Rat(Int(b))); }

// Raised when a structural invariant of the theory fails (as opposed to bad
// user input, which raises std::domain_error).  Maps to a distinct exit code.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rat rat(long n, long d = 1) { return Rat(Int(n), Int(d)); }

inline bool is_integer(const Rat& x) { return x.denominator() == 1; }

// True for x in Z + 1/2 (strict half-integers).
inline bool is_half_integer(const Rat& x) { return x.denominator() == 2; }

inline Int floor_int(const Rat& x) {
    Int q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

inline Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

inline int rat_sign(const Rat& x) {
    if (x.numerator() == 0) return 0;
    return x.numerator() > 0 ? 1 : -1;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base.numerator() == 0) throw std::domain_error("rat_pow: 0 to negative power");
        return rat_pow(Rat(1) / base, -e);  // ctor would reject a negative denominator
    }
    Rat r(1);
    Rat b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int r(1);
    for (long i = 0; i < k; ++i) {
        r *= Int(n - i);
        r /= Int(i + 1);
    }
    return r;
}

inline double to_double(const Rat& x) {
    return x.numerator().convert_to<double>() / x.denominator().convert_to<double>();
}

inline std::string to_string(const Int& n) { return n.str(); }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rat& x) {
    std::string s = x.numerator().str();
    if (x.denominator() != 1) {
        s += '/';
        s += x.denominator().str();
    }
    return s;
}

// Accepts "p" or "p/q", optional leading '-', arbitrary precision.
inline Rat parse_rational(std::string_view text) {
    auto bad = [&] { throw std::domain_error("bad rational: '" + std::string(text) + "'"); };
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view t) -> Int {
        if (t.empty()) bad();
        bool neg = t[0] == '-';
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) bad();
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') bad();
        Int v{std::string(t.substr(i))};
        return neg ? Int(-v) : v;
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
}

}  // namespace residua
