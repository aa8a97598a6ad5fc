#pragma once

// nlohmann::json conversions for every result type. Rationals travel as
// strings ("-1/3", "2") so no precision is lost.

#include <optional>
#include <string>

#include <json.hpp>

#include "braidtwist/braid_word.hpp"
#include "braidtwist/dehornoy.hpp"
#include "braidtwist/fdtc.hpp"
#include "braidtwist/invariants.hpp"
#include "braidtwist/murasugi3.hpp"
#include "braidtwist/qp.hpp"
#include "braidtwist/rational.hpp"

namespace nlohmann {

template <>
struct adl_serializer<braidtwist::Rational> {
    static void to_json(json& j, const braidtwist::Rational& r) { j = braidtwist::to_string(r); }
    static braidtwist::Rational from_json(const json& j) {
        if (j.is_number_integer()) return braidtwist::Rational(j.get<std::int64_t>());
        if (j.is_string()) return braidtwist::parse_rational(j.get<std::string>());
        throw braidtwist::braid_error("expected a rational as string or integer, got " + j.dump());
    }
};

template <>
struct adl_serializer<braidtwist::BraidWord> {
    static void to_json(json& j, const braidtwist::BraidWord& w) { j = {{"n", w.strands()}, {"word", w.letters()}}; }
    static braidtwist::BraidWord from_json(const json& j) {
        return braidtwist::BraidWord(j.at("n").get<int>(), j.at("word").get<std::vector<int>>());
    }
};

template <>
struct adl_serializer<braidtwist::SyllableWord> {
    static void to_json(json& j, const braidtwist::SyllableWord& s) {
        j = json::object();
        j["n"] = s.strands();
        j["syllables"] = json::array();
        for (const auto& syl : s.syllables()) {
            j["syllables"].push_back(
                {{"conjugator", syl.conjugator.letters()}, {"generator", syl.generator}, {"sign", syl.sign}});
        }
    }
    static braidtwist::SyllableWord from_json(const json& j) {
        const int n = j.at("n").get<int>();
        std::vector<braidtwist::Syllable> out;
        for (const auto& s : j.at("syllables")) {
            out.push_back({braidtwist::BraidWord(n, s.at("conjugator").get<std::vector<int>>()),
                           s.at("generator").get<int>(), s.at("sign").get<int>()});
        }
        return braidtwist::SyllableWord(n, std::move(out));
    }
};

template <>
struct adl_serializer<braidtwist::Murasugi3Form> {
    static void to_json(json& j, const braidtwist::Murasugi3Form& f) {
        j = {{"class", braidtwist::class_number(f)}, {"d", braidtwist::twist_exponent(f)}};
        if (const auto* c1 = std::get_if<braidtwist::MurasugiClass1>(&f)) j["a"] = c1->a;
        if (const auto* c2 = std::get_if<braidtwist::MurasugiClass2>(&f)) j["m"] = c2->m;
        if (const auto* c3 = std::get_if<braidtwist::MurasugiClass3>(&f)) j["m"] = c3->m;
    }
    static braidtwist::Murasugi3Form from_json(const json& j) {
        const auto d = j.at("d").get<std::int64_t>();
        braidtwist::Murasugi3Form f;
        switch (j.at("class").get<int>()) {
            case 1: f = braidtwist::MurasugiClass1{d, j.at("a").get<std::vector<std::int64_t>>()}; break;
            case 2: f = braidtwist::MurasugiClass2{d, j.at("m").get<std::int64_t>()}; break;
            case 3: f = braidtwist::MurasugiClass3{d, j.at("m").get<std::int64_t>()}; break;
            default: throw braidtwist::braid_error("Murasugi class must be 1, 2 or 3");
        }
        braidtwist::validate(f);
        return f;
    }
};

}  // namespace nlohmann

namespace braidtwist {

using json = nlohmann::json;

namespace detail {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <typename T>
std::optional<T> get_optional(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

}  // namespace detail

inline void to_json(json& j, OrderSign s) { j = std::string(to_token(s)); }
inline void from_json(const json& j, OrderSign& s) {
    const auto t = j.get<std::string>();
    if (t == "LT") s = OrderSign::Less;
    else if (t == "EQ") s = OrderSign::Equal;
    else if (t == "GT") s = OrderSign::Greater;
    else throw braid_error("unknown order token '" + t + "'");
}

inline void to_json(json& j, const FloorResult& r) {
    j = {{"floor", r.floor}, {"convention", std::string(kFloorConvention)}};
}
inline void from_json(const json& j, FloorResult& r) {
    if (j.contains("convention") && j.at("convention").get<std::string>() != kFloorConvention) {
        throw braid_error("unsupported floor convention");
    }
    r.floor = j.at("floor").get<std::int64_t>();
}

inline void to_json(json& j, const FdtcResult& r) {
    j = {{"value", r.value}, {"N", r.power_used}, {"floor", r.floor_of_power}, {"lo", r.lo}, {"hi", r.hi}};
}
inline void from_json(const json& j, FdtcResult& r) {
    r.value = j.at("value").get<Rational>();
    r.power_used = j.at("N").get<std::int64_t>();
    r.floor_of_power = j.at("floor").get<std::int64_t>();
    r.lo = j.at("lo").get<Rational>();
    r.hi = j.at("hi").get<Rational>();
}

inline void to_json(json& j, const SignBounds& b) {
    j = {{"lower_zero", b.lower_zero}, {"upper_zero", b.upper_zero}};
}
inline void from_json(const json& j, SignBounds& b) {
    b.lower_zero = j.at("lower_zero").get<bool>();
    b.upper_zero = j.at("upper_zero").get<bool>();
}

inline void to_json(json& j, const InvariantBounds& b) {
    j = {{"tau_lo", b.tau_lo}, {"tau_hi", b.tau_hi}, {"s_lo", b.s_lo}, {"s_hi", b.s_hi}};
}
inline void from_json(const json& j, InvariantBounds& b) {
    b.tau_lo = j.at("tau_lo").get<Rational>();
    b.tau_hi = j.at("tau_hi").get<Rational>();
    b.s_lo = j.at("s_lo").get<Rational>();
    b.s_hi = j.at("s_hi").get<Rational>();
}

inline void to_json(json& j, const QpReport& r) {
    j = {{"qp_length", r.qp_length},
         {"positive_syllables", r.positive_syllables},
         {"negative_syllables", r.negative_syllables},
         {"cor_a_bounds", {r.cor_a_bounds.first, r.cor_a_bounds.second}},
         {"cor_a_conditional", r.cor_a_conditional},
         {"quasipositive_form", r.quasipositive_form},
         {"closure_is_knot", r.closure_is_knot},
         {"passes_destab_screen", r.passes_destab_screen}};
    detail::put_optional(j, "chi4", r.chi4);
    detail::put_optional(j, "bt_upper", r.bt_upper);
    detail::put_optional(j, "g4", r.g4);
}
inline void from_json(const json& j, QpReport& r) {
    r.qp_length = j.at("qp_length").get<std::int64_t>();
    r.positive_syllables = j.at("positive_syllables").get<std::int64_t>();
    r.negative_syllables = j.at("negative_syllables").get<std::int64_t>();
    r.cor_a_bounds = {j.at("cor_a_bounds").at(0).get<Rational>(), j.at("cor_a_bounds").at(1).get<Rational>()};
    r.cor_a_conditional = j.at("cor_a_conditional").get<bool>();
    r.quasipositive_form = j.at("quasipositive_form").get<bool>();
    r.closure_is_knot = j.at("closure_is_knot").get<bool>();
    r.passes_destab_screen = j.at("passes_destab_screen").get<bool>();
    r.chi4 = detail::get_optional<std::int64_t>(j, "chi4");
    r.bt_upper = detail::get_optional<std::int64_t>(j, "bt_upper");
    r.g4 = detail::get_optional<Rational>(j, "g4");
}

inline void to_json(json& j, const PredicateResult& r) {
    j = {{"predicate", r.name}, {"status", std::string(to_token(r.status))}, {"detail", r.detail}};
    detail::put_optional(j, "lhs", r.lhs);
    detail::put_optional(j, "rhs", r.rhs);
}
inline void from_json(const json& j, PredicateResult& r) {
    r.name = j.at("predicate").get<std::string>();
    r.status = parse_audit_status(j.at("status").get<std::string>());
    r.detail = j.value("detail", std::string{});
    r.lhs = detail::get_optional<Rational>(j, "lhs");
    r.rhs = detail::get_optional<Rational>(j, "rhs");
}

inline void to_json(json& j, const AuditRecord& r) {
    j = {{"n", r.strands}, {"floor", r.floor}, {"ceiling", r.ceiling}, {"fdtc", r.fdtc}, {"results", r.results}};
}
inline void from_json(const json& j, AuditRecord& r) {
    r.strands = j.at("n").get<int>();
    r.floor = j.at("floor").get<std::int64_t>();
    r.ceiling = j.at("ceiling").get<std::int64_t>();
    r.fdtc = j.at("fdtc").get<FdtcResult>();
    r.results = j.at("results").get<std::vector<PredicateResult>>();
}

inline void to_json(json& j, const AuditInputs& in) {
    j = json::object();
    detail::put_optional(j, "g3", in.g3);
    detail::put_optional(j, "g4", in.g4);
    detail::put_optional(j, "g4_upper", in.g4_upper);
    detail::put_optional(j, "finite_order", in.finite_concordance_order);
    detail::put_optional(j, "qp_length", in.qp_length);
}
inline void from_json(const json& j, AuditInputs& in) {
    in.g3 = detail::get_optional<Rational>(j, "g3");
    in.g4 = detail::get_optional<Rational>(j, "g4");
    in.g4_upper = detail::get_optional<Rational>(j, "g4_upper");
    in.finite_concordance_order = detail::get_optional<bool>(j, "finite_order");
    in.qp_length = detail::get_optional<std::int64_t>(j, "qp_length");
}

}  // namespace braidtwist
