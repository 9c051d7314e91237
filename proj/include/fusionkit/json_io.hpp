#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/galois.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/qdim.hpp"
#include "fusionkit/qseries.hpp"
#include "fusionkit/verlinde.hpp"

namespace fusionkit {

using nlohmann::json;

inline json to_json(const Rational& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_array()) return Rational(mpz_class(j.at(0).get<long>()), mpz_class(j.at(1).get<long>()));
    return Rational(mpz_class(j.at("num").get<std::string>()),
                    mpz_class(j.at("den").get<std::string>()));
}

inline json to_json(const ModularDatum& md) {
    json j;
    j["labels"] = md.labels;
    j["weights"] = json::array();
    for (const auto& w : md.weights) j["weights"].push_back(to_json(w));
    j["central_charge"] = to_json(md.central_charge);
    j["s"] = json::array();
    for (std::size_t i = 0; i < md.size(); ++i)
        for (std::size_t k = 0; k < md.size(); ++k)
            j["s"].push_back(json::array({static_cast<double>(md.s.at(i, k).real()),
                                          static_cast<double>(md.s.at(i, k).imag())}));
    j["conjugation"] = md.conjugation;
    j["vacuum_index"] = md.vacuum_index;
    return j;
}

inline json to_json(const FusionTensor& ft) {
    json j;
    j["dim"] = ft.dim;
    j["entries"] = json::array();
    for (std::size_t i = 0; i < ft.dim; ++i)
        for (std::size_t jj = 0; jj < ft.dim; ++jj)
            for (std::size_t k = 0; k < ft.dim; ++k)
                if (ft.at(i, jj, k) != 0)
                    j["entries"].push_back(json::array({i, jj, k, ft.at(i, jj, k)}));
    return j;
}

inline json to_json(const ValidationReport& rep) {
    json j = json::array();
    for (const auto& c : rep.checks)
        j.push_back({{"name", c.name}, {"pass", c.pass},
                     {"residual", static_cast<double>(c.residual)}});
    return j;
}

inline json to_json(const DimensionValue& dv) {
    json j;
    j["value"] = static_cast<double>(dv.value);
    j["tag"] = dv.tag_str();
    j["residual"] = static_cast<double>(dv.residual);
    return j;
}

inline json to_json(const LimitEstimate& est) {
    json j;
    switch (est.route) {
        case LimitRoute::CoefficientRatio: j["route"] = "coefficient-ratio"; break;
        case LimitRoute::PartialSumRatio: j["route"] = "partial-sum-ratio"; break;
        case LimitRoute::AbelLimit: j["route"] = "abel"; break;
    }
    j["value"] = static_cast<double>(est.value);
    j["converged"] = est.converged;
    j["tolerance"] = static_cast<double>(est.tolerance);
    j["trace"] = json::array();
    for (const auto& [p, v] : est.trace)
        j["trace"].push_back(json::array({static_cast<double>(p), static_cast<double>(v)}));
    if (!est.skipped.empty()) {
        j["skipped"] = json::array();
        for (long double y : est.skipped) j["skipped"].push_back(static_cast<double>(y));
    }
    return j;
}

inline json to_json(const GaloisReport& rep) {
    json j;
    j["group_order"] = rep.group_order;
    j["subgroups"] = json::array();
    for (const auto& r : rep.rows)
        j["subgroups"].push_back({{"elements", r.elements},
                                  {"order", r.order},
                                  {"index", r.index},
                                  {"normal", r.normal},
                                  {"galois", r.galois}});
    return j;
}

/// Lattice input file: {"gram": [[...],...], "cosets": [[[num,den],...],...]}.
/// Coset entries may be integers, [num,den] pairs, or {"num","den"} objects.
inline void lattice_from_json(const json& j, IntMatrix& gram,
                              std::vector<RationalVector>& cosets) {
    gram.clear();
    for (const auto& row : j.at("gram")) gram.push_back(row.get<std::vector<long>>());
    cosets.clear();
    for (const auto& cv : j.at("cosets")) {
        RationalVector v;
        for (const auto& c : cv) v.push_back(rational_from_json(c));
        cosets.push_back(v);
    }
}

// ---------------------------------------------------------------------------
// CSV emitters

inline std::string csv_qdim(const ModularDatum& md, const std::vector<DimensionValue>& dims) {
    std::ostringstream os;
    os << "label,weight,qdim,tag,residual\n";
    for (std::size_t i = 0; i < dims.size(); ++i)
        os << md.labels[i] << "," << md.weights[i].str() << ","
           << static_cast<double>(dims[i].value) << "," << dims[i].tag_str() << ","
           << static_cast<double>(dims[i].residual) << "\n";
    return os.str();
}

inline std::string csv_fusion(const ModularDatum& md, const FusionTensor& ft) {
    std::ostringstream os;
    os << "i,j,k,multiplicity\n";
    for (std::size_t i = 0; i < ft.dim; ++i)
        for (std::size_t j = 0; j < ft.dim; ++j)
            for (std::size_t k = 0; k < ft.dim; ++k)
                if (ft.at(i, j, k) != 0)
                    os << md.labels[i] << "," << md.labels[j] << "," << md.labels[k] << ","
                       << ft.at(i, j, k) << "\n";
    return os.str();
}

inline std::string csv_series(const GradedSeries& s) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (std::size_t j = 0; j < s.coeff.size(); ++j)
        os << (s.leading_exponent + Rational(static_cast<long>(j)) * s.grading_step).str() << ","
           << s.coeff[j].get_str() << "\n";
    return os.str();
}

inline std::string csv_trace(const LimitEstimate& est) {
    std::ostringstream os;
    os << "parameter,estimate\n";
    for (const auto& [p, v] : est.trace)
        os << static_cast<double>(p) << "," << static_cast<double>(v) << "\n";
    return os.str();
}

} // namespace fusionkit
