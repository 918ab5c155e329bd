#pragma once

// JSON views of certificates and reports.  Field order is fixed, payloads
// carry no timestamps, and integers that fit in 64 bits are emitted as JSON
// numbers (wider values fall back to decimal strings).

#include <json.hpp>

#include <limits>
#include <string>

#include "curvedim/bounds.hpp"
#include "curvedim/numeric.hpp"
#include "curvedim/quadric.hpp"
#include "curvedim/rigidity.hpp"

namespace curvedim {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_int(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return ordered_json(v.convert_to<long long>());
    return ordered_json(v.str());
}

inline Int int_from_json(const ordered_json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw ParseError("expected integer-valued JSON field");
}

inline ordered_json to_json(const RigidityCertificate& c) {
    ordered_json j;
    j["d"] = json_int(c.d);
    j["g"] = json_int(c.g);
    j["k"] = json_int(c.k);
    j["l"] = json_int(c.l);
    j["N"] = json_int(c.n_dim);
    j["M"] = json_int(c.m_dim);
    j["bezout_lhs"] = json_int(c.bezout_lhs);
    j["bezout_rhs"] = json_int(c.bezout_rhs);
    j["deformation_bound"] = json_int(c.deformation_bound);
    j["pgl5"] = kDimPGL5;
    j["first_by_degree"] = c.first_by_degree;
    j["second_by_degree"] = c.second_by_degree;
    j["verdict"] = "not_rigid";
    return j;
}

inline RigidityCertificate certificate_from_json(const ordered_json& j) {
    RigidityCertificate c{
        int_from_json(j.at("d")),
        int_from_json(j.at("g")),
        int_from_json(j.at("k")),
        int_from_json(j.at("l")),
        int_from_json(j.at("N")),
        int_from_json(j.at("M")),
        int_from_json(j.at("bezout_lhs")),
        int_from_json(j.at("bezout_rhs")),
        int_from_json(j.at("deformation_bound")),
        j.at("first_by_degree").get<bool>(),
        j.at("second_by_degree").get<bool>(),
    };
    if (int_from_json(j.at("pgl5")) != kDimPGL5)
        throw ParseError("certificate: unexpected pgl5 value");
    return c;
}

inline ordered_json to_json(const CoverageReport& rep) {
    ordered_json j;
    j["d"] = json_int(rep.d);
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.per_t) {
        ordered_json r;
        r["t"] = json_int(row.t);
        r["L"] = json_int(row.L);
        r["R"] = json_int(row.R);
        r["stitched"] = row.stitched;
        rows.push_back(std::move(r));
    }
    j["per_t"] = std::move(rows);
    j["paper_max_g"] = rep.paper_max_g ? json_int(*rep.paper_max_g) : ordered_json(nullptr);
    ordered_json intervals = ordered_json::array();
    for (const auto& iv : rep.closure_intervals)
        intervals.push_back(ordered_json::array({json_int(iv.lo), json_int(iv.hi)}));
    j["closure_intervals"] = std::move(intervals);
    return j;
}

inline ordered_json to_json(const Int& d, const Int& g, int r, const BoundCertificate& c) {
    ordered_json j;
    j["d"] = json_int(d);
    j["g"] = json_int(g);
    j["r"] = r;
    j["bound"] = json_int(c.value);
    j["branch"] = provenance_name(c.provenance);
    j["mu"] = c.witness_s ? json_int(*c.witness_s) : ordered_json(nullptr);
    return j;
}

} // namespace curvedim
