#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/errors.hpp"

namespace braidtwist {

/// (s2 s1)^{3m+1} s2^{-2k} in B_3; the closure K_{m,k} is always a knot.
struct FamilyKtd {
    std::int64_t m = 0;
    std::int64_t k = 1;
};

/// (Delta^2)^k s1^-1 s2^{-(6k-1)} in B_3.
struct FamilyBTtau {
    std::int64_t k = 1;
};

/// base * Delta^{2t}.
struct FamilyFullTwists {
    BraidWord base;
    std::int64_t t = 0;
};

/// (s1 ... s_{p-1})^q in B_p.
struct FamilyTorus {
    std::int64_t p = 2;
    std::int64_t q = 1;
};

using FamilySpec = std::variant<FamilyKtd, FamilyBTtau, FamilyFullTwists, FamilyTorus>;

namespace detail {

inline void append_power(std::vector<BraidWord::Letter>& out, int g, std::int64_t e) {
    out.insert(out.end(), static_cast<std::size_t>(e < 0 ? -e : e), e < 0 ? -g : g);
}

}  // namespace detail

inline BraidWord generate(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> BraidWord {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FamilyKtd>) {
                if (s.m < 0 || s.k < 1) throw braid_error("ktd family needs m >= 0 and k >= 1");
                std::vector<BraidWord::Letter> out;
                for (std::int64_t r = 0; r < 3 * s.m + 1; ++r) {
                    out.push_back(2);
                    out.push_back(1);
                }
                detail::append_power(out, 2, -2 * s.k);
                BraidWord w(3, std::move(out));
                if (closure_components(w) != 1) throw internal_error("ktd word does not close to a knot");
                return w;
            } else if constexpr (std::is_same_v<T, FamilyBTtau>) {
                if (s.k < 1) throw braid_error("bttau family needs k >= 1");
                std::vector<BraidWord::Letter> out = full_twist_power(3, s.k).letters();
                out.push_back(-1);
                detail::append_power(out, 2, -(6 * s.k - 1));
                return BraidWord(3, std::move(out));
            } else if constexpr (std::is_same_v<T, FamilyFullTwists>) {
                return concat(s.base, full_twist_power(s.base.strands(), s.t));
            } else {
                if (s.p < 2 || s.q < 1) throw braid_error("torus family needs p >= 2 and q >= 1");
                const int p = static_cast<int>(s.p);
                std::vector<BraidWord::Letter> out;
                out.reserve(static_cast<std::size_t>((p - 1) * s.q));
                for (std::int64_t r = 0; r < s.q; ++r) {
                    for (int g = 1; g < p; ++g) out.push_back(g);
                }
                return BraidWord(p, std::move(out));
            }
        },
        spec);
}

}  // namespace braidtwist
