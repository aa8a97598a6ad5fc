#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/errors.hpp"
#include "braidtwist/fdtc.hpp"
#include "braidtwist/rational.hpp"

namespace braidtwist {

/// Word-level bounds on tau and s of a knot closure.
struct InvariantBounds {
    Rational tau_lo;
    Rational tau_hi;
    Rational s_lo;
    Rational s_hi;

    friend bool operator==(const InvariantBounds&, const InvariantBounds&) = default;
};

/// (k - l - n + 1)/2 <= tau <= (k - l + n - 1)/2, and twice that for s.
/// Depends on the word as written, not just its conjugacy class.
inline InvariantBounds tau_s_bounds(const BraidWord& w) {
    if (closure_components(w) != 1) throw braid_error("tau_s_bounds: closure is not a knot");
    const auto c = exponent_counts(w);
    const std::int64_t n = w.strands();
    const Rational s_lo(c.sum - n + 1);
    const Rational s_hi(c.sum + n - 1);
    return InvariantBounds{s_lo / 2, s_hi / 2, s_lo, s_hi};
}

/// tau(T_{p,q}) = (p-1)(q-1)/2.
inline Rational torus_tau(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw braid_error("torus_tau: parameters must be positive");
    if (std::gcd(p, q) != 1) {
        throw braid_error("torus_tau: T(" + std::to_string(p) + "," + std::to_string(q) + ") is not a knot");
    }
    return Rational((p - 1) * (q - 1), 2);
}

/// Torus families for which Upsilon(1) is tabulated: T_{2,2k+1} and T_{3,3m+1}.
struct UpsilonFamily {
    enum class Kind { T2, T3 };
    Kind kind;
    std::int64_t parameter;
};

inline std::int64_t upsilon_at_one(const UpsilonFamily& f) {
    if (f.parameter < 0) throw braid_error("upsilon_at_one: parameter must be non-negative");
    return f.kind == UpsilonFamily::Kind::T2 ? -f.parameter : -2 * f.parameter;
}

/// Slice genus of T_{3,3m+1} # -T_{2,2k+1}:
/// max(|tau difference|, |Upsilon(1) difference|).
inline Rational g4_torus_difference(std::int64_t m, std::int64_t k) {
    if (m < 0 || k < 0) throw braid_error("g4_torus_difference: parameters must be non-negative");
    const Rational tau_gap = abs(torus_tau(3, 3 * m + 1) - torus_tau(2, 2 * k + 1));
    const Rational ups_gap = Rational(std::abs(upsilon_at_one({UpsilonFamily::Kind::T3, m}) -
                                               upsilon_at_one({UpsilonFamily::Kind::T2, k})));
    return std::max(tau_gap, ups_gap);
}

// ---------------------------------------------------------------------------
// Bound audits

enum class AuditStatus { Pass, Fail, CounterexampleCandidate, MissingInput, NotApplicable };

inline std::string_view to_token(AuditStatus s) {
    switch (s) {
        case AuditStatus::Pass: return "PASS";
        case AuditStatus::Fail: return "FAIL";
        case AuditStatus::CounterexampleCandidate: return "COUNTEREXAMPLE-CANDIDATE";
        case AuditStatus::MissingInput: return "MISSING-INPUT";
        case AuditStatus::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

inline AuditStatus parse_audit_status(std::string_view s) {
    for (const auto v : {AuditStatus::Pass, AuditStatus::Fail, AuditStatus::CounterexampleCandidate,
                         AuditStatus::MissingInput, AuditStatus::NotApplicable}) {
        if (to_token(v) == s) return v;
    }
    throw braid_error("unknown audit status '" + std::string(s) + "'");
}

/// Predicate groups that can be requested.
struct PredicateSet {
    bool ito = false;         // floor and BT against g3
    bool question15 = false;  // |BT| <= 2 g4 + n - 2
    bool slice3 = false;      // finite concordance order 3-braids: |BT| <= 1
    bool qp = false;          // quasipositive: BT <= m - 1 and BT <= 2 g4 + n - 2

    static PredicateSet all() { return {true, true, true, true}; }
    bool any() const { return ito || question15 || slice3 || qp; }

    friend bool operator==(const PredicateSet&, const PredicateSet&) = default;
};

inline PredicateSet parse_predicates(std::string_view csv) {
    PredicateSet out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i != csv.size() && csv[i] != ',') continue;
        const auto name = csv.substr(start, i - start);
        start = i + 1;
        if (name.empty()) continue;
        if (name == "ito") out.ito = true;
        else if (name == "question15") out.question15 = true;
        else if (name == "slice3") out.slice3 = true;
        else if (name == "qp") out.qp = true;
        else if (name == "all") out = PredicateSet::all();
        else throw braid_error("unknown predicate '" + std::string(name) + "'");
    }
    return out;
}

/// Caller-supplied ground truth. The tool never computes genera of
/// non-positive braids itself.
struct AuditInputs {
    std::optional<Rational> g3;
    std::optional<Rational> g4;
    std::optional<Rational> g4_upper;  // used by question15 when g4 is absent
    std::optional<bool> finite_concordance_order;
    std::optional<std::int64_t> qp_length;

    friend bool operator==(const AuditInputs&, const AuditInputs&) = default;
};

struct PredicateResult {
    std::string name;
    AuditStatus status = AuditStatus::Pass;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    std::string detail;

    friend bool operator==(const PredicateResult&, const PredicateResult&) = default;
};

struct AuditRecord {
    int strands = 0;
    std::int64_t floor = 0;
    std::int64_t ceiling = 0;
    FdtcResult fdtc;
    std::vector<PredicateResult> results;

    friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

namespace detail {

inline PredicateResult missing(std::string name, std::string_view what) {
    return PredicateResult{std::move(name), AuditStatus::MissingInput, std::nullopt, std::nullopt,
                           "requires " + std::string(what)};
}

inline PredicateResult check_le(std::string name, const Rational& lhs, const Rational& rhs, std::string detail,
                                AuditStatus on_fail = AuditStatus::Fail) {
    return PredicateResult{std::move(name), lhs <= rhs ? AuditStatus::Pass : on_fail, lhs, rhs, std::move(detail)};
}

}  // namespace detail

/// Evaluates the requested genus/FDTC inequalities for the knot closing w.
///
/// ito_floor compares max(floor, -ceiling) against (4 g3 - 2)/(n + 2) + 3/2
/// strictly. That is the one-sided statement for w and for its mirror
/// image under the max{t : Delta^{2t} <= w} floor convention.
inline AuditRecord audit_bounds(const BraidWord& w, const AuditInputs& in, const PredicateSet& which,
                                const FdtcOptions& opts = {}) {
    if (closure_components(w) != 1) throw braid_error("audit_bounds: closure is not a knot");
    AuditRecord rec;
    rec.strands = w.strands();
    rec.floor = dehornoy_floor(w, opts).floor;
    rec.ceiling = ceiling_from_floor(w, rec.floor, opts.step_cap);
    rec.fdtc = fdtc_exact(w, opts);
    const Rational bt = rec.fdtc.value;
    const Rational abs_bt = abs(bt);
    const std::int64_t n = w.strands();

    if (which.ito) {
        if (!in.g3) {
            rec.results.push_back(detail::missing("ito_floor", "g3"));
            rec.results.push_back(detail::missing("ito_bt", "g3"));
        } else {
            const Rational g3 = *in.g3;
            const Rational bound = (4 * g3 - 2) / Rational(n + 2) + Rational(3, 2);
            const Rational lhs(std::max(rec.floor, -rec.ceiling));
            rec.results.push_back(PredicateResult{"ito_floor", lhs < bound ? AuditStatus::Pass : AuditStatus::Fail,
                                                  lhs, bound, "max(floor, -ceiling) < (4 g3 - 2)/(n + 2) + 3/2"});
            rec.results.push_back(detail::check_le("ito_bt", abs_bt, g3 + 2, "|BT| <= g3 + 2"));
        }
    }
    if (which.question15) {
        if (in.g4) {
            rec.results.push_back(detail::check_le("question15", abs_bt, 2 * *in.g4 + (n - 2), "|BT| <= 2 g4 + n - 2",
                                                   AuditStatus::CounterexampleCandidate));
        } else if (in.g4_upper) {
            rec.results.push_back(detail::check_le("question15", abs_bt, 2 * *in.g4_upper + (n - 2),
                                                   "|BT| <= 2 g4 + n - 2, evaluated at the supplied g4 upper bound",
                                                   AuditStatus::CounterexampleCandidate));
        } else {
            rec.results.push_back(detail::missing("question15", "g4 or g4_upper"));
        }
    }
    if (which.slice3) {
        if (!in.finite_concordance_order) {
            rec.results.push_back(detail::missing("slice3", "finite_order"));
        } else if (n != 3 || !*in.finite_concordance_order) {
            rec.results.push_back(PredicateResult{"slice3", AuditStatus::NotApplicable, std::nullopt, std::nullopt,
                                                  "needs a 3-braid whose closure has finite concordance order"});
        } else {
            rec.results.push_back(detail::check_le("slice3", abs_bt, Rational(1), "|BT| <= 1"));
        }
    }
    if (which.qp) {
        if (!in.qp_length) {
            rec.results.push_back(detail::missing("qp_length_bound", "qp_length"));
        } else if (n < 3) {
            rec.results.push_back(PredicateResult{"qp_length_bound", AuditStatus::NotApplicable, std::nullopt,
                                                  std::nullopt, "needs at least 3 strands"});
        } else {
            rec.results.push_back(detail::check_le("qp_length_bound", bt, Rational(*in.qp_length - 1), "BT <= m - 1"));
            if (in.g4) {
                rec.results.push_back(detail::check_le("qp_genus_bound", bt, 2 * *in.g4 + (n - 2), "BT <= 2 g4 + n - 2"));
            }
        }
    }
    return rec;
}

}  // namespace braidtwist
