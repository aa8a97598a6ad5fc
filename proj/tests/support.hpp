#pragma once

// Shared helpers for the test suites: seeded random words and an
// independent equality oracle based on the Artin action on the free group.

#include <cstdint>
#include <random>
#include <vector>

#include "braidtwist/braidtwist.hpp"

namespace braidtwist::testing {

inline constexpr std::uint64_t kSeed = 20261018;

class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed = kSeed) : rng_(seed) {}

    BraidWord word(int n, std::size_t max_len, std::size_t min_len = 0) {
        std::uniform_int_distribution<std::size_t> len(min_len, max_len);
        return word_of_length(n, len(rng_));
    }

    BraidWord word_of_length(int n, std::size_t len) {
        std::uniform_int_distribution<int> gen(1, n - 1);
        std::bernoulli_distribution neg(0.5);
        std::vector<int> out(len);
        for (auto& x : out) x = neg(rng_) ? -gen(rng_) : gen(rng_);
        return BraidWord(n, std::move(out));
    }

    BraidWord positive_word(int n, std::size_t len) {
        std::uniform_int_distribution<int> gen(1, n - 1);
        std::vector<int> out(len);
        for (auto& x : out) x = gen(rng_);
        return BraidWord(n, std::move(out));
    }

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Reduced free-group word on x_1..x_n, letters +-index.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& out, int x) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
}

inline FreeWord free_inverse(const FreeWord& w) {
    FreeWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

/// Image of every generator x_1..x_n under the braid, acting on the right:
/// sigma_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to x_i.
/// Two braids are equal iff their images agree (faithfulness of the Artin
/// representation), which is independent of handle reduction.
inline std::vector<FreeWord> artin_images(const BraidWord& w) {
    const int n = w.strands();
    std::vector<FreeWord> img(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) img[static_cast<std::size_t>(j)] = {j};
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        const int g = *it;
        const int i = g > 0 ? g : -g;
        // Precompute the image of x_i, x_{i+1} under the generator itself.
        std::vector<FreeWord> sub(static_cast<std::size_t>(n) + 1);
        for (int j = 1; j <= n; ++j) sub[static_cast<std::size_t>(j)] = {j};
        if (g > 0) {
            sub[static_cast<std::size_t>(i)] = {i, i + 1, -i};
            sub[static_cast<std::size_t>(i + 1)] = {i};
        } else {
            sub[static_cast<std::size_t>(i)] = {i + 1};
            sub[static_cast<std::size_t>(i + 1)] = {-(i + 1), i, i + 1};
        }
        for (int j = 1; j <= n; ++j) {
            FreeWord next;
            for (const int x : img[static_cast<std::size_t>(j)]) {
                const auto& piece = sub[static_cast<std::size_t>(x > 0 ? x : -x)];
                if (x > 0) {
                    for (const int y : piece) push_reduced(next, y);
                } else {
                    for (const int y : free_inverse(piece)) push_reduced(next, y);
                }
            }
            img[static_cast<std::size_t>(j)] = std::move(next);
        }
    }
    return img;
}

inline bool artin_equal(const BraidWord& a, const BraidWord& b) {
    return a.strands() == b.strands() && artin_images(a) == artin_images(b);
}

/// Sign of a braid certified independently: the handle-reduced word must be
/// Artin-equal to the input and syntactically sigma-definite (or empty).
inline std::optional<OrderSign> certified_sign(const BraidWord& w) {
    const auto r = handle_reduce(w);
    if (!artin_equal(r, w)) return std::nullopt;
    if (r.empty()) return OrderSign::Equal;
    const auto cls = syntactic_sigma_class(r);
    if (!cls) return std::nullopt;
    return cls->sign > 0 ? OrderSign::Greater : OrderSign::Less;
}

}  // namespace braidtwist::testing
