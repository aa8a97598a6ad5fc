#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/errors.hpp"

namespace braidtwist {

enum class OrderSign { Less, Equal, Greater };

inline std::string_view to_token(OrderSign s) {
    switch (s) {
        case OrderSign::Less: return "LT";
        case OrderSign::Equal: return "EQ";
        case OrderSign::Greater: return "GT";
    }
    return "??";
}

inline OrderSign flip(OrderSign s) {
    if (s == OrderSign::Less) return OrderSign::Greater;
    if (s == OrderSign::Greater) return OrderSign::Less;
    return s;
}

/// Default hard cap on handle reductions per call.
inline constexpr std::uint64_t kDefaultStepCap = 10'000'000;

struct SigmaClass {
    int index;  // minimal generator index present
    int sign;   // +1 if it occurs only positively, -1 if only negatively

    friend bool operator==(const SigmaClass&, const SigmaClass&) = default;
};

/// (i, +-1) when the word is sigma_i-positive / sigma_i-negative as written,
/// with i the lowest generator index present. Absent for the empty word or
/// when sigma_i occurs with both signs.
inline std::optional<SigmaClass> syntactic_sigma_class(const BraidWord& w) {
    if (w.empty()) return std::nullopt;
    int lowest = w.strands();
    for (const auto g : w.letters()) lowest = std::min(lowest, std::abs(g));
    bool pos = false;
    bool neg = false;
    for (const auto g : w.letters()) {
        if (g == lowest) pos = true;
        if (g == -lowest) neg = true;
    }
    if (pos && neg) return std::nullopt;
    return SigmaClass{lowest, pos ? +1 : -1};
}

namespace detail {

// Handle reduction over a doubly-linked letter list.
//
// A sigma_i-handle is sigma_i^e v sigma_i^-e where v only uses generators
// with index > i. It is permitted when v holds no sigma_{i+1}-handle; then
// the outer letters are dropped and each sigma_{i+1}^d in v becomes
// sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.
//
// Search is organised as a stack of frames. The bottom frame scans the whole
// word for the leftmost handle of the lowest index present; each frame above
// scans the interior of the handle found by the frame below for the leftmost
// handle of the next index. A frame that reaches the end of its region
// proves the enclosing handle permitted, which is then reduced. Letters left
// of a reduced handle are never touched, so the frame below resumes from the
// letter just before it.
class HandleReducer {
public:
    HandleReducer(const BraidWord& w, std::uint64_t step_cap)
        : strands_(w.strands()), cap_(step_cap), count_(static_cast<std::size_t>(w.strands()) + 1, 0) {
        nodes_.reserve(w.size() * 2 + 16);
        nodes_.push_back({kHead, kTail, 0});
        nodes_.push_back({kHead, kTail, 0});
        int last = kHead;
        for (const auto g : w.letters()) last = insert_after(last, g);
    }

    void run() {
        int lowest = lowest_index();
        if (lowest == 0) return;

        std::vector<Frame> frames;
        frames.push_back(Frame{lowest, kHead, kTail, next(kHead), kHead, {}});

        while (true) {
            Frame& f = frames.back();
            bool descended = false;
            if (f.index < strands_) {
                while (f.cursor != f.close) {
                    const int x = f.cursor;
                    const int g = nodes_[static_cast<std::size_t>(x)].letter;
                    if (std::abs(g) == f.index) {
                        if (!f.seen.empty() && (letter(f.seen.back()) > 0) != (g > 0)) {
                            const int open = f.seen.back();
                            f.seen.pop_back();
                            f.resume = prev(open);
                            const Frame child{f.index + 1, open, x, next(open), open, {}};
                            frames.push_back(child);
                            descended = true;
                            break;
                        }
                        f.seen.push_back(x);
                    }
                    f.cursor = next(x);
                }
            }
            if (descended) continue;
            if (frames.size() == 1) break;

            // No handle of this frame's index inside: the enclosing handle is permitted.
            const int open = f.open;
            const int close = f.close;
            const int index = f.index - 1;
            frames.pop_back();
            reduce(open, close, index);

            Frame& parent = frames.back();
            parent.cursor = next(parent.resume);
            if (frames.size() == 1 && count_[static_cast<std::size_t>(parent.index)] == 0) {
                lowest = lowest_index();
                if (lowest == 0) break;
                parent.index = lowest;
                parent.seen.clear();
                parent.cursor = next(kHead);
                parent.resume = kHead;
            }
        }
    }

    BraidWord result() const {
        std::vector<BraidWord::Letter> out;
        for (int x = next(kHead); x != kTail; x = next(x)) out.push_back(letter(x));
        return BraidWord(strands_, std::move(out));
    }

    std::uint64_t steps() const noexcept { return steps_; }

private:
    static constexpr int kHead = 0;
    static constexpr int kTail = 1;

    struct Node {
        int prev;
        int next;
        int letter;
    };

    struct Frame {
        int index;
        int open;   // exclusive region bounds
        int close;
        int cursor;
        int resume;  // letter preceding the handle currently being processed
        std::vector<int> seen;  // sigma_index letters already passed; all share one sign
    };

    int next(int x) const { return nodes_[static_cast<std::size_t>(x)].next; }
    int prev(int x) const { return nodes_[static_cast<std::size_t>(x)].prev; }
    int letter(int x) const { return nodes_[static_cast<std::size_t>(x)].letter; }

    int lowest_index() const {
        for (int i = 1; i < strands_; ++i) {
            if (count_[static_cast<std::size_t>(i)] > 0) return i;
        }
        return 0;
    }

    int insert_after(int pos, int g) {
        int id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
        } else {
            id = static_cast<int>(nodes_.size());
            nodes_.push_back({});
        }
        const int after = next(pos);
        nodes_[static_cast<std::size_t>(id)] = {pos, after, g};
        nodes_[static_cast<std::size_t>(pos)].next = id;
        nodes_[static_cast<std::size_t>(after)].prev = id;
        ++count_[static_cast<std::size_t>(std::abs(g))];
        return id;
    }

    int insert_before(int pos, int g) { return insert_after(prev(pos), g); }

    void erase(int x) {
        auto& node = nodes_[static_cast<std::size_t>(x)];
        nodes_[static_cast<std::size_t>(node.prev)].next = node.next;
        nodes_[static_cast<std::size_t>(node.next)].prev = node.prev;
        --count_[static_cast<std::size_t>(std::abs(node.letter))];
        node.letter = 0;
        free_.push_back(x);
    }

    void reduce(int open, int close, int index) {
        if (++steps_ > cap_) {
            throw step_cap_exceeded("handle reduction exceeded the step cap of " + std::to_string(cap_));
        }
        const int e = letter(open) > 0 ? 1 : -1;
        const int left = prev(open);
        const int right = next(close);
        for (int x = next(open); x != close;) {
            const int after = next(x);
            const int g = letter(x);
            if (std::abs(g) == index + 1) {
                const int d = g > 0 ? 1 : -1;
                insert_before(x, -e * (index + 1));
                --count_[static_cast<std::size_t>(index + 1)];
                ++count_[static_cast<std::size_t>(index)];
                nodes_[static_cast<std::size_t>(x)].letter = d * index;
                insert_after(x, e * (index + 1));
            }
            x = after;
        }
        erase(open);
        erase(close);

        // Free cancellation confined to the rewritten stretch.
        for (int cur = next(left); cur != right;) {
            const int before = prev(cur);
            if (before != left && letter(before) == -letter(cur)) {
                const int after = next(cur);
                erase(before);
                erase(cur);
                cur = after;
            } else {
                cur = next(cur);
            }
        }
    }

    int strands_;
    std::uint64_t cap_;
    std::uint64_t steps_ = 0;
    std::vector<Node> nodes_;
    std::vector<int> free_;
    std::vector<std::int64_t> count_;
};

}  // namespace detail

/// Rewrites w into an equivalent word that is empty, sigma-positive or
/// sigma-negative. Throws step_cap_exceeded past `step_cap` reductions.
inline BraidWord handle_reduce(const BraidWord& w, std::uint64_t step_cap = kDefaultStepCap) {
    detail::HandleReducer reducer(w, step_cap);
    reducer.run();
    BraidWord out = free_reduce(reducer.result());
#ifdef BRAIDTWIST_CHECK_INVARIANTS
    if (exponent_counts(out).sum != exponent_counts(w).sum) {
        throw internal_error("handle_reduce changed the exponent sum");
    }
    if (permutation(out) != permutation(w)) {
        throw internal_error("handle_reduce changed the underlying permutation");
    }
    if (!out.empty() && !syntactic_sigma_class(out)) {
        throw internal_error("handle_reduce output is not sigma-definite");
    }
#endif
    return out;
}

inline OrderSign order_sign(const BraidWord& w, std::uint64_t step_cap = kDefaultStepCap) {
    const auto reduced = handle_reduce(w, step_cap);
    if (reduced.empty()) return OrderSign::Equal;
    const auto cls = syntactic_sigma_class(reduced);
    if (!cls) throw internal_error("handle reduction left a sigma-indefinite word");
    return cls->sign > 0 ? OrderSign::Greater : OrderSign::Less;
}

/// Dehornoy order of braids: a > b iff b^-1 a > 1.
inline OrderSign compare(const BraidWord& a, const BraidWord& b, std::uint64_t step_cap = kDefaultStepCap) {
    detail::require_same_strands(a, b);
    return order_sign(concat(inverse(b), a), step_cap);
}

inline bool braid_equal(const BraidWord& a, const BraidWord& b, std::uint64_t step_cap = kDefaultStepCap) {
    return compare(a, b, step_cap) == OrderSign::Equal;
}

}  // namespace braidtwist
