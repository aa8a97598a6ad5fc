#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "braidtwist/json_io.hpp"

namespace braidtwist {

/// One corpus line: {"n":3,"word":[...],"meta":{...}}.
struct CorpusEntry {
    BraidWord word;
    AuditInputs inputs;
    std::optional<Rational> expected_bt;
    std::optional<std::int64_t> expected_floor;
    json extra_meta = json::object();  // unrecognised meta keys, kept verbatim

    friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

inline CorpusEntry parse_corpus_entry(const json& j) {
    CorpusEntry e{j.get<BraidWord>(), {}, std::nullopt, std::nullopt, json::object()};
    if (j.contains("meta")) {
        const auto& meta = j.at("meta");
        if (!meta.is_object()) throw braid_error("meta must be an object");
        e.inputs = meta.get<AuditInputs>();
        e.expected_bt = detail::get_optional<Rational>(meta, "expected_bt");
        e.expected_floor = detail::get_optional<std::int64_t>(meta, "expected_floor");
        for (const auto& [key, value] : meta.items()) {
            static const std::vector<std::string> known = {"g3",        "g4",          "g4_upper",      "finite_order",
                                                           "qp_length", "expected_bt", "expected_floor"};
            if (std::find(known.begin(), known.end(), key) == known.end()) e.extra_meta[key] = value;
        }
    }
    return e;
}

inline json to_corpus_json(const CorpusEntry& e) {
    json j = e.word;
    json meta = e.inputs;
    detail::put_optional(meta, "expected_bt", e.expected_bt);
    detail::put_optional(meta, "expected_floor", e.expected_floor);
    for (const auto& [key, value] : e.extra_meta.items()) meta[key] = value;
    if (!meta.empty()) j["meta"] = meta;
    return j;
}

struct AuditEntryReport {
    std::size_t line = 0;  // 1-based
    std::optional<AuditRecord> record;
    std::string error;
};

struct AuditSummary {
    std::size_t entries = 0;
    std::size_t errors = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t counterexample_candidates = 0;
    std::size_t missing_input = 0;
    std::size_t not_applicable = 0;

    void add(const AuditEntryReport& r) {
        ++entries;
        if (!r.record) {
            ++errors;
            return;
        }
        for (const auto& p : r.record->results) {
            switch (p.status) {
                case AuditStatus::Pass: ++pass; break;
                case AuditStatus::Fail: ++fail; break;
                case AuditStatus::CounterexampleCandidate: ++counterexample_candidates; break;
                case AuditStatus::MissingInput: ++missing_input; break;
                case AuditStatus::NotApplicable: ++not_applicable; break;
            }
        }
    }

    friend bool operator==(const AuditSummary&, const AuditSummary&) = default;
};

inline void to_json(json& j, const AuditSummary& s) {
    j = {{"entries", s.entries},
         {"errors", s.errors},
         {"pass", s.pass},
         {"fail", s.fail},
         {"counterexample_candidates", s.counterexample_candidates},
         {"missing_input", s.missing_input},
         {"not_applicable", s.not_applicable}};
}

inline void to_json(json& j, const AuditEntryReport& r) {
    j = {{"line", r.line}};
    if (r.record) {
        j["record"] = *r.record;
    } else {
        j["error"] = r.error;
    }
}

/// Audits one corpus line. Errors are captured, never thrown.
inline AuditEntryReport audit_line(std::size_t line_no, const std::string& text, const PredicateSet& which,
                                   const FdtcOptions& opts) {
    AuditEntryReport report;
    report.line = line_no;
    try {
        const auto entry = parse_corpus_entry(json::parse(text));
        auto record = audit_bounds(entry.word, entry.inputs, which, opts);
        if (entry.expected_floor) {
            const Rational got(record.floor);
            record.results.push_back(PredicateResult{"expected_floor",
                                                     got == Rational(*entry.expected_floor) ? AuditStatus::Pass
                                                                                            : AuditStatus::Fail,
                                                     got, Rational(*entry.expected_floor), "floor == expected"});
        }
        if (entry.expected_bt) {
            record.results.push_back(PredicateResult{"expected_bt",
                                                     record.fdtc.value == *entry.expected_bt ? AuditStatus::Pass
                                                                                              : AuditStatus::Fail,
                                                     record.fdtc.value, *entry.expected_bt, "BT == expected"});
        }
        report.record = std::move(record);
    } catch (const json::exception& e) {
        report.error = std::string("malformed line: ") + e.what();
    } catch (const std::exception& e) {
        report.error = e.what();
    }
    return report;
}

/// Streams a JSON-lines corpus, writing one JSON line per non-blank entry
/// in input order followed by a {"summary": ...} line. Entries are audited
/// concurrently in batches.
inline AuditSummary audit_stream(std::istream& in, std::ostream& out, const PredicateSet& which,
                                 const FdtcOptions& opts = {}, unsigned threads = 0) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t batch = static_cast<std::size_t>(threads) * 16;

    AuditSummary summary;
    std::size_t line_no = 0;
    std::string text;
    bool done = false;
    while (!done) {
        std::vector<std::pair<std::size_t, std::string>> pending;
        while (pending.size() < batch) {
            if (!std::getline(in, text)) {
                done = true;
                break;
            }
            ++line_no;
            if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
            pending.emplace_back(line_no, text);
        }

        std::vector<AuditEntryReport> reports(pending.size());
        std::vector<std::future<void>> workers;
        const std::size_t per = (pending.size() + threads - 1) / threads;
        for (std::size_t start = 0; start < pending.size(); start += per) {
            const std::size_t stop = std::min(pending.size(), start + per);
            workers.push_back(std::async(std::launch::async, [&, start, stop] {
                for (std::size_t i = start; i < stop; ++i) {
                    reports[i] = audit_line(pending[i].first, pending[i].second, which, opts);
                }
            }));
        }
        for (auto& w : workers) w.get();

        for (const auto& r : reports) {
            summary.add(r);
            out << json(r).dump() << '\n';
        }
    }
    out << json{{"summary", summary}}.dump() << '\n';
    return summary;
}

}  // namespace braidtwist
