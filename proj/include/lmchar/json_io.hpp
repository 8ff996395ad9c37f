#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "losev_manin.hpp"

namespace lmchar {

using Json = nlohmann::ordered_json;

namespace detail {

inline long long to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi) throw std::overflow_error("coefficient exceeds JSON integer range");
    return v.convert_to<long long>();
}

}  // namespace detail

inline Json partition_to_json(const Partition& la) {
    Json arr = Json::array();
    for (unsigned p : la.parts()) arr.push_back(p);
    return arr;
}

inline Partition partition_from_json(const Json& j) {
    std::vector<unsigned> parts;
    for (const auto& v : j) parts.push_back(v.get<unsigned>());
    return Partition(std::move(parts));
}

// [[exp, num, den], ...] with ascending exponents.
inline Json poly_to_json(const RationalPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(Json::array(
            {e, detail::to_int64(numerator(c)), detail::to_int64(denominator(c))}));
    return arr;
}

inline RationalPoly poly_from_json(const Json& j) {
    RationalPoly p;
    for (const auto& entry : j) {
        const unsigned e = entry.at(0).get<unsigned>();
        const Rational c(Int(entry.at(1).get<long long>()), Int(entry.at(2).get<long long>()));
        p += RationalPoly::monomial(e, c);
    }
    return p;
}

enum class Basis { powersum, schur };

inline Json symfunc_to_json(const SymFunc& f, Basis basis) {
    Json terms = Json::array();
    if (basis == Basis::schur) {
        for (const auto& [la, c] : to_schur(f))
            terms.push_back(Json{{"y", partition_to_json(la)}, {"poly", poly_to_json(c)}});
    } else {
        for (const auto& [la, c] : f.terms())
            terms.push_back(Json{{"y", partition_to_json(la)}, {"poly", poly_to_json(c)}});
    }
    return Json{{"basis", basis == Basis::schur ? "schur" : "powersum"}, {"terms", terms}};
}

inline SymFunc symfunc_from_json(const Json& j) {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "schur" && basis != "powersum")
        throw std::invalid_argument("unknown basis: " + basis);
    SymFunc f;
    for (const auto& term : j.at("terms")) {
        const Partition la = partition_from_json(term.at("y"));
        const RationalPoly c = poly_from_json(term.at("poly"));
        if (basis == "schur")
            f += schur(la) * c;
        else
            f.add_term(la, c);
    }
    return f;
}

inline Json bisymfunc_to_json(const BiSymFunc& f, Basis basis) {
    Json terms = Json::array();
    if (basis == Basis::schur) {
        for (const auto& [key, c] : bi_to_schur(f))
            terms.push_back(Json{{"x", partition_to_json(key.first)},
                                 {"y", partition_to_json(key.second)},
                                 {"poly", poly_to_json(c)}});
    } else {
        for (const auto& [key, c] : f.terms())
            terms.push_back(Json{{"x", partition_to_json(key.first)},
                                 {"y", partition_to_json(key.second)},
                                 {"poly", poly_to_json(c)}});
    }
    return Json{{"basis", basis == Basis::schur ? "schur" : "powersum"}, {"terms", terms}};
}

inline BiSymFunc bisymfunc_from_json(const Json& j) {
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "schur" && basis != "powersum")
        throw std::invalid_argument("unknown basis: " + basis);
    if (basis == "schur") {
        BiSchurExpansion e;
        for (const auto& term : j.at("terms"))
            e.emplace(PartitionPair{partition_from_json(term.at("x")),
                                    partition_from_json(term.at("y"))},
                      poly_from_json(term.at("poly")));
        return bi_from_schur(e);
    }
    BiSymFunc f;
    for (const auto& term : j.at("terms"))
        f.add_term({partition_from_json(term.at("x")), partition_from_json(term.at("y"))},
                   poly_from_json(term.at("poly")));
    return f;
}

inline Json report_to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            Json{{"name", c.name}, {"n", c.n}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"suite", r.suite}, {"max_n", r.max_n}, {"checks", checks}};
}

}  // namespace lmchar
