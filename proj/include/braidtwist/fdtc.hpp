#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/dehornoy.hpp"
#include "braidtwist/errors.hpp"
#include "braidtwist/rational.hpp"

namespace braidtwist {

/// Boundary convention for the Dehornoy floor.
inline constexpr std::string_view kFloorConvention = "max-t-with-Delta^{2t}<=beta";

struct FloorResult {
    std::int64_t floor = 0;

    friend bool operator==(const FloorResult&, const FloorResult&) = default;
};

struct FdtcResult {
    Rational value;
    std::int64_t power_used = 1;      // N
    std::int64_t floor_of_power = 0;  // [beta^N]_D
    Rational lo;
    Rational hi;

    friend bool operator==(const FdtcResult&, const FdtcResult&) = default;
};

struct FdtcOptions {
    std::uint64_t step_cap = kDefaultStepCap;
    /// Largest |t| the floor bracketing may probe before giving up.
    std::int64_t bracket_cap = std::int64_t{1} << 32;
};

namespace detail {

// Compares beta against Delta^{2t}: true iff Delta^{2t} <= beta.
class FloorOracle {
public:
    FloorOracle(const BraidWord& beta, const FdtcOptions& opts)
        : beta_(beta), inverse_twist_(inverse(full_twist(beta.strands()))), opts_(opts) {}

    bool at_least(std::int64_t t) const {
        if (t > opts_.bracket_cap || t < -opts_.bracket_cap) {
            throw step_cap_exceeded("floor bracketing exceeded |t| = " + std::to_string(opts_.bracket_cap));
        }
        // Delta^{-2t} beta, written with whichever of Delta^{+-2} is needed.
        const BraidWord shift =
            t >= 0 ? power(inverse_twist_, t) : power(full_twist(beta_.strands()), -t);
        return order_sign(concat(shift, beta_), opts_.step_cap) != OrderSign::Less;
    }

private:
    const BraidWord& beta_;
    BraidWord inverse_twist_;
    FdtcOptions opts_;
};

}  // namespace detail

/// [beta]_D = max{t : Delta^{2t} <= beta}, by exponential bracketing from
/// t = +-1 followed by bisection of the monotone predicate.
inline FloorResult dehornoy_floor(const BraidWord& w, const FdtcOptions& opts = {}) {
    const BraidWord beta = free_reduce(w);
    const detail::FloorOracle oracle(beta, opts);

    std::int64_t good;  // at_least(good) holds
    std::int64_t bad;   // at_least(bad) fails
    if (oracle.at_least(0)) {
        good = 0;
        bad = 1;
        while (oracle.at_least(bad)) {
            good = bad;
            bad *= 2;
        }
    } else {
        bad = 0;
        good = -1;
        while (!oracle.at_least(good)) {
            bad = good;
            good *= 2;
        }
    }
    while (bad - good > 1) {
        const std::int64_t mid = good + (bad - good) / 2;
        (oracle.at_least(mid) ? good : bad) = mid;
    }
    return FloorResult{good};
}

/// min{s : beta <= Delta^{2s}} given the already computed floor.
inline std::int64_t ceiling_from_floor(const BraidWord& w, std::int64_t floor, std::uint64_t step_cap = kDefaultStepCap) {
    const bool exact = compare(w, full_twist_power(w.strands(), floor), step_cap) == OrderSign::Equal;
    return exact ? floor : floor + 1;
}

/// min{s : beta <= Delta^{2s}}; equals floor + 1 unless beta is a power of Delta^2.
inline std::int64_t dehornoy_ceiling(const BraidWord& w, const FdtcOptions& opts = {}) {
    return ceiling_from_floor(w, dehornoy_floor(w, opts).floor, opts.step_cap);
}

/// Closed interval [ [beta^N]_D / N, ([beta^N]_D + 1) / N ] containing BT(beta).
inline std::pair<Rational, Rational> fdtc_interval(const BraidWord& w, std::int64_t N,
                                                   const FdtcOptions& opts = {}) {
    if (N < 1) throw braid_error("fdtc_interval: power must be at least 1");
    const auto f = dehornoy_floor(free_reduce(power(w, N)), opts).floor;
    return {Rational(f, N), Rational(f + 1, N)};
}

/// Exact FDTC. BT(beta) has denominator at most n, and two such fractions
/// differ by at least 1/n^2, so an interval of width 1/(n^2 + 1) pins it.
inline FdtcResult fdtc_exact(const BraidWord& w, const FdtcOptions& opts = {}) {
    const int n = w.strands();
    const std::int64_t N = static_cast<std::int64_t>(n) * n + 1;
    const auto [lo, hi] = fdtc_interval(w, N, opts);

    std::optional<Rational> found;
    for (std::int64_t q = 1; q <= n; ++q) {
        // Every p with lo <= p/q <= hi.
        for (std::int64_t p = braidtwist::floor(lo * q); Rational(p, q) <= hi; ++p) {
            const Rational candidate(p, q);
            if (candidate < lo) continue;
            if (found && *found != candidate) {
                throw internal_error("fdtc_exact: two admissible rationals in [" + to_string(lo) + ", " +
                                     to_string(hi) + "]");
            }
            found = candidate;
        }
    }
    if (!found) {
        throw internal_error("fdtc_exact: no rational with denominator <= " + std::to_string(n) + " in [" +
                             to_string(lo) + ", " + to_string(hi) + "]");
    }
    return FdtcResult{*found, N, (lo * N).numerator(), lo, hi};
}

struct SignBounds {
    bool lower_zero = false;  // BT >= 0 certified
    bool upper_zero = false;  // BT <= 0 certified

    friend bool operator==(const SignBounds&, const SignBounds&) = default;
};

/// A generator occurring with one sign only certifies the sign of BT.
inline SignBounds word_sign_bounds(const BraidWord& w) {
    std::vector<int> seen(static_cast<std::size_t>(w.strands()), 0);  // bit 1: positive, bit 2: negative
    for (const auto g : w.letters()) seen[static_cast<std::size_t>(std::abs(g))] |= g > 0 ? 1 : 2;
    SignBounds out;
    for (const int bits : seen) {
        if (bits == 1) out.lower_zero = true;
        if (bits == 2) out.upper_zero = true;
    }
    return out;
}

/// [0, 1] for a positive destabilization, [-1, 0] for a negative one.
inline std::optional<std::pair<Rational, Rational>> destab_bounds(const BraidWord& w) {
    const auto sign = detect_destabilizable(w);
    if (!sign) return std::nullopt;
    if (*sign > 0) return std::pair{Rational(0), Rational(1)};
    return std::pair{Rational(-1), Rational(0)};
}

}  // namespace braidtwist
