#pragma once

#include <cstdint>
#include <vector>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/dehornoy.hpp"
#include "braidtwist/errors.hpp"

namespace braidtwist {

/// All-positive word equal to w * Delta^{2t}. Each sigma_i^-1 absorbs one
/// central full twist as Delta * X_i, where Delta = X_i sigma_i; leftover
/// twists are appended. The result is certified by an order-equality check.
inline BraidWord make_positive(const BraidWord& w, std::int64_t t, std::uint64_t step_cap = kDefaultStepCap) {
    const int n = w.strands();
    const auto counts = exponent_counts(w);
    if (t < counts.negative) {
        throw braid_error("make_positive: " + std::to_string(counts.negative) +
                          " negative letters need at least that many full twists, got t = " + std::to_string(t));
    }

    const auto delta = garside_delta(n);
    std::vector<std::vector<BraidWord::Letter>> absorbed(static_cast<std::size_t>(n));
    std::vector<BraidWord::Letter> out;
    out.reserve(static_cast<std::size_t>(counts.positive) +
                static_cast<std::size_t>(t) * static_cast<std::size_t>(n * (n - 1)));
    for (const auto g : w.letters()) {
        if (g > 0) {
            out.push_back(g);
            continue;
        }
        auto& rewrite = absorbed[static_cast<std::size_t>(-g)];
        if (rewrite.empty()) {
            const auto ending = delta_ending_with(n, -g);
            rewrite = delta.letters();
            rewrite.insert(rewrite.end(), ending.letters().begin(), ending.letters().end() - 1);
        }
        out.insert(out.end(), rewrite.begin(), rewrite.end());
    }
    const auto rest = full_twist_power(n, t - counts.negative);
    out.insert(out.end(), rest.letters().begin(), rest.letters().end());

    BraidWord result(n, std::move(out));
    if (!braid_equal(result, concat(w, full_twist_power(n, t)), step_cap)) {
        throw internal_error("make_positive: rewritten word is not equal to w * Delta^2t");
    }
    return result;
}

}  // namespace braidtwist
