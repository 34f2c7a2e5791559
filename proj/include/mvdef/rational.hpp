#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace mvdef {

// Exact rational scalar. mpq_class already keeps values canonical
// (gcd-reduced, positive denominator), which is exactly the contract we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serialized form: "num" when the denominator is 1, otherwise "num/den".
inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "num" or "num/den" with an optional leading '-' on the numerator.
// Returns nullopt on malformed input or a zero denominator.
inline std::optional<Rational> rat_parse(const std::string& s) {
    auto is_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    if (!is_int(num, true)) return std::nullopt;
    Integer n(num), d(1);
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (!is_int(den, false)) return std::nullopt;
        d = Integer(den);
        if (d == 0) return std::nullopt;
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return Rational(b);
}

} // namespace mvdef
