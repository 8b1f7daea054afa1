#ifndef BVMS_JSON_IO_HPP
#define BVMS_JSON_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bvms/adjudicate.hpp"
#include "bvms/analysis.hpp"
#include "bvms/gallery.hpp"
#include "bvms/picard.hpp"
#include "bvms/space.hpp"
#include "bvms/verify.hpp"

namespace bvms {

// Reports keep insertion order so serialized output is byte-stable.
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing

inline Rational parse_rational_at(const json& node, const std::string& location) {
    if (!node.is_string()) throw JsonSchemaError(location, "expected a rational string like \"3/2\"");
    try {
        return Rational::parse(node.get<std::string>());
    } catch (const RationalParseError& e) {
        throw JsonSchemaError(location, e.what());
    }
}

/// Space document: {"labels": [...], "dist": [["0","1"],["1","0"]]} with
/// rationals as strings ("p/q", integers, or finite decimals).
inline FiniteSpace parse_space(const json& doc) {
    if (!doc.is_object()) throw JsonSchemaError("/", "expected an object");
    if (!doc.contains("labels")) throw JsonSchemaError("/labels", "missing");
    if (!doc.contains("dist")) throw JsonSchemaError("/dist", "missing");
    const json& jlabels = doc["labels"];
    const json& jdist = doc["dist"];
    if (!jlabels.is_array()) throw JsonSchemaError("/labels", "expected an array");
    if (!jdist.is_array()) throw JsonSchemaError("/dist", "expected an array of rows");

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < jlabels.size(); ++i) {
        if (!jlabels[i].is_string())
            throw JsonSchemaError("/labels/" + std::to_string(i), "expected a string");
        labels.push_back(jlabels[i].get<std::string>());
    }
    std::vector<std::vector<Rational>> dist;
    for (std::size_t i = 0; i < jdist.size(); ++i) {
        if (!jdist[i].is_array())
            throw JsonSchemaError("/dist/" + std::to_string(i), "expected a row array");
        std::vector<Rational> row;
        for (std::size_t j = 0; j < jdist[i].size(); ++j)
            row.push_back(parse_rational_at(jdist[i][j],
                                            "/dist/" + std::to_string(i) + "/" + std::to_string(j)));
        dist.push_back(std::move(row));
    }
    return make_space(std::move(labels), dist);
}

/// Map document: {"image": ["b", "a", ...]} listing the image of each point
/// by label, aligned with the space's point order. Fewer entries than
/// points describe a partial map on that prefix.
inline SelfMap parse_map(const json& doc, const FiniteSpace& space) {
    if (!doc.is_object() || !doc.contains("image"))
        throw JsonSchemaError("/image", "expected an object with an \"image\" array");
    const json& jimage = doc["image"];
    if (!jimage.is_array()) throw JsonSchemaError("/image", "expected an array");
    if (jimage.size() > space.size())
        throw JsonSchemaError("/image", "more entries than the space has points");
    std::vector<PointId> image;
    for (std::size_t i = 0; i < jimage.size(); ++i) {
        const std::string location = "/image/" + std::to_string(i);
        if (!jimage[i].is_string()) throw JsonSchemaError(location, "expected a point label");
        const auto target = space.index_of(jimage[i].get<std::string>());
        if (!target)
            throw JsonSchemaError(location, "no point labelled \"" + jimage[i].get<std::string>() + "\"");
        image.push_back(*target);
    }
    return make_self_map(space, std::move(image));
}

/// Gallery document: {"gallery": "naturals_space", "n": 40, "seed": 1, "v": 1}.
inline GalleryInstance parse_gallery_spec(const json& doc, const EnumerationBudget& budget = {}) {
    if (!doc.is_object() || !doc.contains("gallery"))
        throw JsonSchemaError("/gallery", "expected an object with a \"gallery\" name");
    if (!doc["gallery"].is_string()) throw JsonSchemaError("/gallery", "expected a string");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned())
        throw JsonSchemaError("/n", "expected a positive integer size");
    std::optional<std::uint64_t> seed;
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw JsonSchemaError("/seed", "expected an unsigned integer");
        seed = doc["seed"].get<std::uint64_t>();
    }
    int v = 1;
    if (doc.contains("v")) {
        if (!doc["v"].is_number_unsigned()) throw JsonSchemaError("/v", "expected a positive integer");
        v = doc["v"].get<int>();
    }
    return make_gallery(doc["gallery"].get<std::string>(), doc["n"].get<std::size_t>(), seed, v, budget);
}

// ---------------------------------------------------------------------------
// Serialization

inline json space_to_json(const FiniteSpace& space) {
    json rows = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space.dist(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"labels", space.labels()}, {"dist", std::move(rows)}};
}

inline json map_to_json(const FiniteSpace& space, const SelfMap& map) {
    json image = json::array();
    for (std::size_t i = 0; i < map.domain(); ++i) image.push_back(space.label(map(PointId{i})));
    return json{{"image", std::move(image)}};
}

inline json violation_to_json(const FiniteSpace& space, const ViolationReport& w) {
    json chain = json::array();
    for (const PointId u : w.chain) chain.push_back(space.label(u));
    return json{{"x", space.label(w.x)},
                {"y", space.label(w.y)},
                {"chain", std::move(chain)},
                {"lhs", w.lhs.to_string()},
                {"rhs", w.rhs.to_string()}};
}

inline json certification_to_json(const FiniteSpace& space, const CertificationResult& r) {
    json out{{"verdict", to_string(r.verdict)}, {"tuples_checked", r.tuples_checked}};
    out["witness"] = r.witness ? violation_to_json(space, *r.witness) : json(nullptr);
    return out;
}

inline json min_s_to_json(const FiniteSpace& space, const MinSResult& r) {
    json out{{"min_s", r.value.to_string()}, {"vacuous", r.vacuous}, {"tuples_checked", r.tuples_checked}};
    if (r.argmax) {
        json chain = json::array();
        for (const PointId u : r.argmax->chain) chain.push_back(space.label(u));
        out["attained"] = json{{"x", space.label(r.argmax->x)},
                               {"y", space.label(r.argmax->y)},
                               {"chain", std::move(chain)},
                               {"distance", r.argmax->distance.to_string()},
                               {"chain_sum", r.argmax->chain_sum.to_string()},
                               {"ratio", r.argmax->ratio.to_string()}};
    } else {
        out["attained"] = nullptr;
    }
    return out;
}

inline json contractivity_to_json(const FiniteSpace& space, const ContractivityReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"x", space.label(v.x)},
                                  {"y", space.label(v.y)},
                                  {"before", v.before.to_string()},
                                  {"after", v.after.to_string()}});
    return json{{"holds", r.holds}, {"violations", std::move(violations)}};
}

inline json condition_to_json(const ConditionReport& r,
                              const FiniteSpace* space_for_pair_labels = nullptr) {
    json entries = json::array();
    for (const DeltaEntry& e : r.delta_at) {
        json entry{{"epsilon", e.epsilon.to_string()}};
        switch (e.kind) {
            case DeltaEntry::Kind::Value:
                entry["delta"] = e.delta.to_string();
                entry["unconstrained"] = false;
                break;
            case DeltaEntry::Kind::Unconstrained:
                entry["delta"] = nullptr;
                entry["unconstrained"] = true;
                break;
            case DeltaEntry::Kind::Absent:
                entry["delta"] = nullptr;
                entry["unconstrained"] = false;
                break;
        }
        entries.push_back(std::move(entry));
    }
    json out{{"scope", r.orbital ? "orbit" : "pairs"}, {"holds", r.holds}, {"delta_at", std::move(entries)}};
    if (r.orbital) out["horizon"] = r.horizon;
    if (r.witness) {
        json w;
        if (r.orbital || space_for_pair_labels == nullptr) {
            w["i"] = r.witness->i;
            w["j"] = r.witness->j;
        } else {
            w["x"] = space_for_pair_labels->label(r.witness->i);
            w["y"] = space_for_pair_labels->label(r.witness->j);
        }
        w["before"] = r.witness->before.to_string();
        w["after"] = r.witness->after.to_string();
        w["epsilon"] = r.witness->epsilon.to_string();
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline json trace_to_json(const FiniteSpace& space, const OrbitTrace& trace) {
    json points = json::array();
    for (const PointId p : trace.points) points.push_back(space.label(p));
    json steps = json::array();
    for (const Rational& d : trace.step_dist) steps.push_back(d.to_string());
    json out{{"start", space.label(trace.start)},
             {"points", std::move(points)},
             {"step_dist", std::move(steps)}};
    out["cycle"] = trace.cycle ? json{{"entry", trace.cycle->entry}, {"period", trace.cycle->period}}
                               : json(nullptr);
    out["left_domain"] = trace.left_domain;
    return out;
}

inline json diagnostics_to_json(const OrbitDiagnostics& d) {
    auto seq = [](const std::vector<Rational>& values) {
        json arr = json::array();
        for (const Rational& v : values) arr.push_back(v.to_string());
        return arr;
    };
    json out{{"gap1", seq(d.gap1)},
             {"gap2", seq(d.gap2)},
             {"gap1_decreasing", d.gap1_decreasing},
             {"gap1_vanishing", d.gap1_vanishing},
             {"gap2_vanishing", d.gap2_vanishing},
             {"tolerance", d.tolerance.to_string()}};
    out["to_fixed"] = d.to_fixed ? seq(*d.to_fixed) : json(nullptr);
    out["to_fixed_strictly_decreasing"] = d.to_fixed_strictly_decreasing;
    return out;
}

inline json cauchy_to_json(const CauchyReport& r) {
    json out{{"is_cauchy", r.is_cauchy},
             {"tolerance", r.tolerance.to_string()},
             {"tail_start", r.tail_start},
             {"max_p", r.max_p}};
    out["witness"] = r.witness ? json{{"n", r.witness->n},
                                      {"p", r.witness->p},
                                      {"value", r.witness->value.to_string()}}
                               : json(nullptr);
    return out;
}

inline json bound_to_json(const BoundReport& r) {
    return json{{"v", r.v},
                {"horizon_requested", r.horizon_requested},
                {"horizon_effective", r.horizon_effective},
                {"bound", r.bound.to_string()},
                {"attained_at", r.attained_at}};
}

inline json adjudication_to_json(const FiniteSpace& space, const AdjudicationReport& r) {
    json claims = json::array();
    for (const ClaimOutcome& c : r.claims)
        claims.push_back(json{{"claim", c.claim}, {"upheld", c.upheld}, {"detail", c.detail}});
    json out{{"gallery", r.family},
             {"n", r.size},
             {"class",
              json{{"v", r.adjudicated.v()},
                   {"s", r.adjudicated.s().to_string()},
                   {"status", to_string(r.adjudicated.status())}}},
             {"certification", certification_to_json(space, r.certification)}};
    out["contractive"] = r.contractivity ? contractivity_to_json(space, *r.contractivity) : json(nullptr);
    if (r.fixed_points) {
        json fixed = json::array();
        for (const PointId p : *r.fixed_points) fixed.push_back(space.label(p));
        out["fixed_points"] = std::move(fixed);
    } else {
        out["fixed_points"] = nullptr;
    }
    json orbits = json::array();
    for (const OrbitSummary& o : r.orbits) {
        json jo{{"start", space.label(o.start)}, {"length", o.length}};
        jo["cycle"] = o.cycle ? json{{"entry", o.cycle->entry}, {"period", o.cycle->period}} : json(nullptr);
        jo["limit"] = o.limit ? json(space.label(*o.limit)) : json(nullptr);
        jo["left_domain"] = o.left_domain;
        orbits.push_back(std::move(jo));
    }
    out["orbits"] = std::move(orbits);
    out["condition_a"] = r.condition_a ? condition_to_json(*r.condition_a, &space) : json(nullptr);
    out["condition_b"] = r.condition_b ? condition_to_json(*r.condition_b) : json(nullptr);
    out["orbit_bound"] = r.bound ? bound_to_json(*r.bound) : json(nullptr);
    out["errata"] = r.errata;
    out["upheld"] = r.upheld;
    return out;
}

}  // namespace bvms

#endif
