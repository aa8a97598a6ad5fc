#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/errors.hpp"
#include "braidtwist/fdtc.hpp"
#include "braidtwist/rational.hpp"

namespace braidtwist {

// Murasugi normal forms of 3-braids. Each form is Delta^{2d} times a tail:
//   class 1: s1 s2^{-a_1} ... s1 s2^{-a_k}, a_i >= 0, some a_i > 0
//   class 2: s2^m
//   class 3: s1^m s2^-1, m in {-1, -2, -3}

struct MurasugiClass1 {
    std::int64_t d = 0;
    std::vector<std::int64_t> a;
    friend bool operator==(const MurasugiClass1&, const MurasugiClass1&) = default;
};

struct MurasugiClass2 {
    std::int64_t d = 0;
    std::int64_t m = 0;
    friend bool operator==(const MurasugiClass2&, const MurasugiClass2&) = default;
};

struct MurasugiClass3 {
    std::int64_t d = 0;
    std::int64_t m = -1;
    friend bool operator==(const MurasugiClass3&, const MurasugiClass3&) = default;
};

using Murasugi3Form = std::variant<MurasugiClass1, MurasugiClass2, MurasugiClass3>;

inline int class_number(const Murasugi3Form& f) { return static_cast<int>(f.index()) + 1; }

inline std::int64_t twist_exponent(const Murasugi3Form& f) {
    return std::visit([](const auto& c) { return c.d; }, f);
}

inline void validate(const Murasugi3Form& f) {
    if (const auto* c1 = std::get_if<MurasugiClass1>(&f)) {
        if (c1->a.empty()) throw braid_error("class 1 form needs a non-empty exponent list");
        if (std::any_of(c1->a.begin(), c1->a.end(), [](auto x) { return x < 0; })) {
            throw braid_error("class 1 exponents must be non-negative");
        }
        if (std::none_of(c1->a.begin(), c1->a.end(), [](auto x) { return x > 0; })) {
            throw braid_error("class 1 form needs at least one positive exponent");
        }
    } else if (const auto* c3 = std::get_if<MurasugiClass3>(&f)) {
        if (c3->m < -3 || c3->m > -1) throw braid_error("class 3 form needs m in {-1, -2, -3}");
    }
}

/// Delta^{2d} (Delta = s1 s2 s1) followed by the class tail, freely reduced.
inline BraidWord to_word(const Murasugi3Form& f) {
    validate(f);
    std::vector<BraidWord::Letter> out = power(garside_delta(3), 2 * twist_exponent(f)).letters();
    const auto repeat = [&out](int g, std::int64_t times) {
        out.insert(out.end(), static_cast<std::size_t>(times < 0 ? -times : times), times < 0 ? -g : g);
    };
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MurasugiClass1>) {
                for (const auto a : c.a) {
                    repeat(1, 1);
                    repeat(2, -a);
                }
            } else if constexpr (std::is_same_v<T, MurasugiClass2>) {
                repeat(2, c.m);
            } else {
                repeat(1, c.m);
                repeat(2, -1);
            }
        },
        f);
    return free_reduce(BraidWord(3, std::move(out)));
}

/// Closed-form FDTC: d for classes 1 and 2; d - 1/3, d - 1/2, d - 2/3 for
/// class 3 with m = -1, -2, -3.
inline Rational fdtc_3braid(const Murasugi3Form& f) {
    validate(f);
    const Rational d(twist_exponent(f));
    if (const auto* c3 = std::get_if<MurasugiClass3>(&f)) {
        switch (c3->m) {
            case -1: return d - Rational(1, 3);
            case -2: return d - Rational(1, 2);
            default: return d - Rational(2, 3);
        }
    }
    return d;
}

/// Quasi-alternating classification of 3-braid closures by normal form.
inline bool is_quasi_alternating(const Murasugi3Form& f) {
    validate(f);
    const auto d = twist_exponent(f);
    if (std::holds_alternative<MurasugiClass1>(f)) return d >= -1 && d <= 1;
    if (const auto* c2 = std::get_if<MurasugiClass2>(&f)) {
        return (d == 1 && c2->m >= -3 && c2->m <= -1) || (d == -1 && c2->m >= 1 && c2->m <= 3);
    }
    return d == 0 || d == 1;
}

/// General-engine FDTC of the form's word agrees with the closed form.
inline bool cross_check(const Murasugi3Form& f, const FdtcOptions& opts = {}) {
    return fdtc_exact(to_word(f), opts).value == fdtc_3braid(f);
}

}  // namespace braidtwist
