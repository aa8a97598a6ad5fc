#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidtwist/errors.hpp"
#include "braidtwist/rational.hpp"

namespace braidtwist {

/// A word in the Artin generators of B_n. Letter g > 0 stands for sigma_g,
/// g < 0 for sigma_|g|^-1. Relations are never applied implicitly.
class BraidWord {
public:
    using Letter = int;

    explicit BraidWord(int strands, std::vector<Letter> letters = {})
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 2) {
            throw braid_error("strand count must be at least 2, got " + std::to_string(strands_));
        }
        for (const Letter g : letters_) {
            if (g == 0 || std::abs(g) > strands_ - 1) {
                throw braid_error("generator " + std::to_string(g) + " is invalid in B_" +
                                  std::to_string(strands_));
            }
        }
    }

    int strands() const noexcept { return strands_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::span<const Letter> view() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

namespace detail {

inline void require_same_strands(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) {
        throw braid_error("strand count mismatch: B_" + std::to_string(a.strands()) + " vs B_" +
                          std::to_string(b.strands()));
    }
}

inline int parse_int_token(std::string_view tok, std::string_view whole) {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw braid_error("malformed token '" + std::string(tok) + "' in word '" +
                          std::string(whole) + "'");
    }
    return value;
}

}  // namespace detail

/// Parses whitespace-separated signed integers ("1 -2 3") or the alias
/// form "s1 s2^-1 s3^2". Commas are treated as whitespace.
inline BraidWord parse_word(std::string_view text, int n) {
    // Normalize the typographic minus sign (U+2212) to ASCII.
    std::string buf;
    buf.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            buf.push_back('-');
            i += 2;
        } else if (text[i] == ',') {
            buf.push_back(' ');
        } else {
            buf.push_back(text[i]);
        }
    }

    std::vector<BraidWord::Letter> letters;
    std::size_t pos = 0;
    while (pos < buf.size()) {
        while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
        if (pos >= buf.size()) break;
        std::size_t end = pos;
        while (end < buf.size() && !std::isspace(static_cast<unsigned char>(buf[end]))) ++end;
        const std::string_view tok(buf.data() + pos, end - pos);
        pos = end;

        if (tok.front() == 's' || tok.front() == 'S') {
            const auto caret = tok.find('^');
            const int index = detail::parse_int_token(tok.substr(1, caret == std::string_view::npos
                                                                        ? std::string_view::npos
                                                                        : caret - 1),
                                                      text);
            const int exponent =
                caret == std::string_view::npos ? 1 : detail::parse_int_token(tok.substr(caret + 1), text);
            if (index <= 0 || exponent == 0) {
                throw braid_error("malformed token '" + std::string(tok) + "'");
            }
            const int g = exponent > 0 ? index : -index;
            letters.insert(letters.end(), static_cast<std::size_t>(std::abs(exponent)), g);
        } else {
            const int g = detail::parse_int_token(tok, text);
            if (g == 0) throw braid_error("zero is not a generator");
            letters.push_back(g);
        }
    }
    return BraidWord(n, std::move(letters));
}

/// Canonical text form: space-separated signed integers.
inline std::string to_text(const BraidWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

// Free-group level operations. Braid relations are not applied.

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    detail::require_same_strands(a, b);
    std::vector<BraidWord::Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters().begin(), a.letters().end());
    out.insert(out.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(out));
}

inline BraidWord inverse(const BraidWord& a) {
    std::vector<BraidWord::Letter> out(a.letters().rbegin(), a.letters().rend());
    for (auto& g : out) g = -g;
    return BraidWord(a.strands(), std::move(out));
}

inline BraidWord power(const BraidWord& a, std::int64_t k) {
    const BraidWord base = k >= 0 ? a : inverse(a);
    const auto reps = static_cast<std::size_t>(k >= 0 ? k : -k);
    std::vector<BraidWord::Letter> out;
    out.reserve(base.size() * reps);
    for (std::size_t r = 0; r < reps; ++r) {
        out.insert(out.end(), base.letters().begin(), base.letters().end());
    }
    return BraidWord(a.strands(), std::move(out));
}

/// c * a * c^-1
inline BraidWord conjugate(const BraidWord& a, const BraidWord& by) {
    return concat(concat(by, a), inverse(by));
}

/// Cancels adjacent g, -g pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<BraidWord::Letter> out;
    out.reserve(w.size());
    for (const auto g : w.letters()) {
        if (!out.empty() && out.back() == -g) {
            out.pop_back();
        } else {
            out.push_back(g);
        }
    }
    return BraidWord(w.strands(), std::move(out));
}

/// Free reduction followed by removal of inverse first/last letter pairs.
inline BraidWord cyclic_reduce(const BraidWord& w) {
    const auto reduced = free_reduce(w);
    const auto& l = reduced.letters();
    std::size_t lo = 0;
    std::size_t hi = l.size();
    while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
        ++lo;
        --hi;
    }
    return BraidWord(w.strands(), std::vector<BraidWord::Letter>(l.begin() + lo, l.begin() + hi));
}

/// Garside half twist (s1...s_{n-1})(s1...s_{n-2})...(s1).
inline BraidWord garside_delta(int n) {
    if (n < 2) throw braid_error("strand count must be at least 2");
    std::vector<BraidWord::Letter> out;
    out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int top = n - 1; top >= 1; --top) {
        for (int g = 1; g <= top; ++g) out.push_back(g);
    }
    return BraidWord(n, std::move(out));
}

/// Full twist Delta^2 written as (s1...s_{n-1})^n.
inline BraidWord full_twist(int n) {
    if (n < 2) throw braid_error("strand count must be at least 2");
    std::vector<BraidWord::Letter> out;
    out.reserve(static_cast<std::size_t>(n * (n - 1)));
    for (int rep = 0; rep < n; ++rep) {
        for (int g = 1; g <= n - 1; ++g) out.push_back(g);
    }
    return BraidWord(n, std::move(out));
}

/// Delta^{2t} for any integer t.
inline BraidWord full_twist_power(int n, std::int64_t t) { return power(full_twist(n), t); }

struct ExponentCounts {
    std::int64_t positive = 0;  // k
    std::int64_t negative = 0;  // l
    std::int64_t sum = 0;       // k - l

    friend bool operator==(const ExponentCounts&, const ExponentCounts&) = default;
};

inline ExponentCounts exponent_counts(const BraidWord& w) {
    ExponentCounts c;
    for (const auto g : w.letters()) {
        (g > 0 ? c.positive : c.negative) += 1;
    }
    c.sum = c.positive - c.negative;
    return c;
}

/// Bijection on {1..n}; images[x-1] is the image of x.
class Permutation {
public:
    explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
        std::iota(images_.begin(), images_.end(), 1);
    }

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (const int x : images_) {
            if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)]) {
                throw braid_error("not a permutation");
            }
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    /// (this o other)(x) = this(other(x))
    Permutation compose(const Permutation& other) const {
        std::vector<int> out(images_.size());
        for (int x = 1; x <= size(); ++x) out[static_cast<std::size_t>(x - 1)] = (*this)(other(x));
        return Permutation(std::move(out));
    }

    /// Right-multiplies in place by the transposition (i, i+1).
    void swap_adjacent(int i) {
        std::swap(images_[static_cast<std::size_t>(i - 1)], images_[static_cast<std::size_t>(i)]);
    }

    bool is_identity() const {
        for (int x = 1; x <= size(); ++x) {
            if ((*this)(x) != x) return false;
        }
        return true;
    }

    int cycle_count() const {
        std::vector<bool> seen(images_.size(), false);
        int cycles = 0;
        for (int x = 1; x <= size(); ++x) {
            if (seen[static_cast<std::size_t>(x - 1)]) continue;
            ++cycles;
            for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = (*this)(y)) {
                seen[static_cast<std::size_t>(y - 1)] = true;
            }
        }
        return cycles;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Underlying permutation; perm(ab) = perm(a) o perm(b).
inline Permutation permutation(const BraidWord& w) {
    Permutation p(w.strands());
    for (const auto g : w.letters()) p.swap_adjacent(std::abs(g));
    return p;
}

/// Number of link components of the closure.
inline int closure_components(const BraidWord& w) { return permutation(w).cycle_count(); }

inline bool is_positive(const BraidWord& w) {
    return std::all_of(w.letters().begin(), w.letters().end(), [](int g) { return g > 0; });
}

/// Genus (g3 = g4 = tau = s/2) of the knot closing a positive braid word:
/// (length - n + 1) / 2.
inline Rational positive_braid_genus(const BraidWord& w) {
    if (!is_positive(w)) throw braid_error("positive_braid_genus: word is not positive");
    if (closure_components(w) != 1) throw braid_error("positive_braid_genus: closure is not a knot");
    return Rational(static_cast<std::int64_t>(w.size()) - w.strands() + 1, 2);
}

/// A positive word for Delta whose last letter is sigma_i.
inline BraidWord delta_ending_with(int n, int i) {
    if (i < 1 || i > n - 1) throw braid_error("generator index out of range");
    // Reduced word of w0 * s_i, read off by peeling right descents.
    std::vector<int> reversal(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) reversal[static_cast<std::size_t>(x - 1)] = n + 1 - x;
    Permutation rest(std::move(reversal));
    rest.swap_adjacent(i);

    std::vector<BraidWord::Letter> peeled;
    for (bool found = true; found;) {
        found = false;
        for (int k = 1; k < n; ++k) {
            if (rest(k) > rest(k + 1)) {
                peeled.push_back(k);
                rest.swap_adjacent(k);
                found = true;
                break;
            }
        }
    }
    std::vector<BraidWord::Letter> out(peeled.rbegin(), peeled.rend());
    out.push_back(i);
    if (out.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
        throw internal_error("delta_ending_with: unexpected word length");
    }
    return BraidWord(n, std::move(out));
}

/// Syntactic destabilization screen: after free and cyclic reduction, a
/// single sigma_{n-1}^{+1} (resp. ^{-1}) and no other sigma_{n-1}^{+-1} gives
/// +1 (resp. -1). The letter count is rotation invariant, so checking the
/// reduced word covers every cyclic rotation of it.
inline std::optional<int> detect_destabilizable(const BraidWord& w) {
    const auto reduced = cyclic_reduce(w);
    const int top = w.strands() - 1;
    int pos = 0;
    int neg = 0;
    for (const auto g : reduced.letters()) {
        if (g == top) ++pos;
        if (g == -top) ++neg;
    }
    if (pos == 1 && neg == 0) return +1;
    if (neg == 1 && pos == 0) return -1;
    return std::nullopt;
}

}  // namespace braidtwist
