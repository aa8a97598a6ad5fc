#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace braidtwist {

/// Exact reduced fraction with positive denominator.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p", "p/q" and "-p/q".
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    try {
        std::size_t used = 0;
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            const long long p = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(p);
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        const long long p = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(s);
        const long long q = std::stoll(den, &used);
        if (used != den.size() || q == 0) throw std::invalid_argument(s);
        return Rational(p, q);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Largest integer not exceeding r.
inline std::int64_t floor(const Rational& r) {
    const auto p = r.numerator();
    const auto q = r.denominator();
    return p >= 0 ? p / q : -((-p + q - 1) / q);
}

}  // namespace braidtwist
