#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/errors.hpp"
#include "braidtwist/fdtc.hpp"
#include "braidtwist/rational.hpp"

namespace braidtwist {

/// One factor (w sigma_i w^-1)^sign.
struct Syllable {
    BraidWord conjugator;
    int generator = 1;
    int sign = +1;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

class SyllableWord {
public:
    explicit SyllableWord(int strands, std::vector<Syllable> syllables = {})
        : strands_(strands), syllables_(std::move(syllables)) {
        if (strands_ < 2) throw braid_error("strand count must be at least 2");
        for (const auto& s : syllables_) {
            if (s.conjugator.strands() != strands_) throw braid_error("conjugator strand count mismatch");
            if (s.generator < 1 || s.generator > strands_ - 1) {
                throw braid_error("syllable generator " + std::to_string(s.generator) + " is invalid in B_" +
                                  std::to_string(strands_));
            }
            if (s.sign != 1 && s.sign != -1) throw braid_error("syllable sign must be +1 or -1");
        }
    }

    int strands() const noexcept { return strands_; }
    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    std::size_t size() const noexcept { return syllables_.size(); }

    std::int64_t positive_count() const {
        return std::count_if(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.sign > 0; });
    }
    std::int64_t negative_count() const { return static_cast<std::int64_t>(size()) - positive_count(); }
    bool is_quasipositive_form() const { return negative_count() == 0; }

    friend bool operator==(const SyllableWord&, const SyllableWord&) = default;

private:
    int strands_;
    std::vector<Syllable> syllables_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

/// "w | i | +; w | i | -; ..." with w in word text format (possibly empty).
inline SyllableWord parse_syllables(std::string_view text, int n) {
    std::vector<Syllable> out;
    for (const auto raw : detail::split(text, ';')) {
        const auto piece = detail::trim(raw);
        if (piece.empty()) continue;
        const auto fields = detail::split(piece, '|');
        if (fields.size() != 3) {
            throw braid_error("syllable '" + std::string(piece) + "' must have the form 'w | i | +-'");
        }
        Syllable s{parse_word(detail::trim(fields[0]), n), 0, 0};
        const auto gen = detail::trim(fields[1]);
        s.generator = detail::parse_int_token(gen, piece);
        const auto sign = detail::trim(fields[2]);
        if (sign == "+" || sign == "+1" || sign == "1") {
            s.sign = 1;
        } else if (sign == "-" || sign == "-1") {
            s.sign = -1;
        } else {
            throw braid_error("syllable sign '" + std::string(sign) + "' must be + or -");
        }
        out.push_back(std::move(s));
    }
    return SyllableWord(n, std::move(out));
}

inline std::string to_text(const SyllableWord& s) {
    std::string out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const auto& syl = s.syllables()[j];
        if (j) out += "; ";
        out += to_text(syl.conjugator) + " | " + std::to_string(syl.generator) + " | " + (syl.sign > 0 ? "+" : "-");
    }
    return out;
}

/// Product of the (w_j sigma_{i_j}^{e_j} w_j^-1), freely reduced.
inline BraidWord expand(const SyllableWord& s) {
    std::vector<BraidWord::Letter> out;
    for (const auto& syl : s.syllables()) {
        const auto& w = syl.conjugator.letters();
        out.insert(out.end(), w.begin(), w.end());
        out.push_back(syl.sign * syl.generator);
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    }
    return free_reduce(BraidWord(s.strands(), std::move(out)));
}

struct QpReport {
    std::int64_t qp_length = 0;  // m
    std::int64_t positive_syllables = 0;
    std::int64_t negative_syllables = 0;
    // Present only for all-positive input.
    std::optional<std::int64_t> chi4;
    std::optional<std::int64_t> bt_upper;
    // Present only for all-positive input whose closure is a knot.
    std::optional<Rational> g4;
    // Bounds valid under unverified hypotheses (no destabilization, chi4 = n - m).
    std::pair<Rational, Rational> cor_a_bounds;
    bool quasipositive_form = false;
    bool closure_is_knot = false;
    bool passes_destab_screen = false;  // syntactic screen only
    bool cor_a_conditional = true;

    friend bool operator==(const QpReport&, const QpReport&) = default;
};

struct QpReportOptions {
    bool require_quasipositive = false;
    bool require_g4 = false;
};

inline QpReport qp_report(const SyllableWord& s, const QpReportOptions& opts = {}) {
    QpReport r;
    const auto n = static_cast<std::int64_t>(s.strands());
    r.qp_length = static_cast<std::int64_t>(s.size());
    r.positive_syllables = s.positive_count();
    r.negative_syllables = s.negative_count();
    r.quasipositive_form = s.is_quasipositive_form();

    const auto word = expand(s);
    r.closure_is_knot = closure_components(word) == 1;
    r.passes_destab_screen = !detect_destabilizable(word).has_value();

    if ((opts.require_quasipositive || opts.require_g4) && !r.quasipositive_form) {
        throw braid_error("qp_report: quasipositive quantities requested for a word with negative syllables");
    }
    if (opts.require_g4 && !r.closure_is_knot) {
        throw braid_error("qp_report: g4 requested but the closure has " +
                          std::to_string(closure_components(word)) + " components");
    }

    if (r.quasipositive_form) {
        r.chi4 = n - r.qp_length;
        r.bt_upper = r.qp_length - 1;
        if (r.closure_is_knot) r.g4 = Rational(r.qp_length - n + 1, 2);
    }
    r.cor_a_bounds = {Rational(std::min<std::int64_t>(1 - r.negative_syllables, 0)),
                      Rational(std::max<std::int64_t>(r.positive_syllables - 1, 0))};
    return r;
}

/// 0 <= BT(expand(s)) <= m - 1 for a quasipositive word of m >= 1 syllables
/// on n >= 3 strands.
inline bool check_qp_bt_bound(const SyllableWord& s, const FdtcOptions& opts = {}) {
    if (!s.is_quasipositive_form()) throw braid_error("check_qp_bt_bound: word has negative syllables");
    if (s.strands() < 3) throw braid_error("check_qp_bt_bound: requires at least 3 strands");
    if (s.size() == 0) throw braid_error("check_qp_bt_bound: requires at least one syllable");
    const auto bt = fdtc_exact(expand(s), opts).value;
    const auto m = static_cast<std::int64_t>(s.size());
    return bt >= Rational(0) && bt <= Rational(m - 1);
}

}  // namespace braidtwist
