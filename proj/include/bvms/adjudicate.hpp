#ifndef BVMS_ADJUDICATE_HPP
#define BVMS_ADJUDICATE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvms/analysis.hpp"
#include "bvms/gallery.hpp"
#include "bvms/picard.hpp"
#include "bvms/verify.hpp"

namespace bvms {

struct ClaimOutcome {
    std::string claim;
    bool upheld = false;
    std::string detail;
};

struct OrbitSummary {
    PointId start;
    std::size_t length = 0;
    std::optional<CycleInfo> cycle;
    std::optional<PointId> limit;  // the fixed point, when the cycle has period 1
    bool left_domain = false;
};

/// One consolidated run of the whole battery over a gallery instance:
/// class certification, contractivity, fixed points, iteration from every
/// start, the two uniform conditions, and the orbit bound. `upheld` means
/// every documented claim survived.
struct AdjudicationReport {
    std::string family;
    std::size_t size = 0;
    MetricClass adjudicated;
    CertificationResult certification;
    std::optional<ContractivityReport> contractivity;
    std::optional<std::vector<PointId>> fixed_points;
    std::vector<OrbitSummary> orbits;
    std::optional<ConditionReport> condition_a;
    std::optional<ConditionReport> condition_b;
    std::optional<BoundReport> bound;
    std::vector<ClaimOutcome> claims;
    std::vector<std::string> errata;
    bool upheld = false;
};

inline AdjudicationReport adjudicate(const GalleryInstance& g, const EnumerationBudget& budget = {},
                                     std::size_t horizon = 16) {
    AdjudicationReport report;
    report.family = g.family;
    report.size = g.size;
    report.errata = g.errata;
    report.adjudicated = g.claimed;

    report.certification = verify_polygon(g.space, g.claimed.v(), g.claimed.s(), budget);
    report.adjudicated = g.claimed.with_status(report.certification.verdict == Verdict::Refuted
                                                   ? MetricClass::Status::Refuted
                                                   : MetricClass::Status::Certified);
    report.claims.push_back(
        {"metric_class", report.adjudicated.status() == MetricClass::Status::Certified,
         "(v=" + std::to_string(g.claimed.v()) + ", s=" + g.claimed.s().to_string() + ") " +
             to_string(report.certification.verdict)});

    if (g.map) {
        const SelfMap& map = *g.map;
        report.contractivity = check_contractive(g.space, map);
        if (g.expect_contractive) {
            report.claims.push_back({"contractive", report.contractivity->holds == *g.expect_contractive,
                                     report.contractivity->holds ? "holds" : "refuted"});
        }

        report.fixed_points = find_fixed_points(g.space, map);
        if (g.expect_fixed_points) {
            std::vector<std::string> got;
            for (const PointId p : *report.fixed_points) got.push_back(g.space.label(p));
            const bool match = got == *g.expect_fixed_points;
            std::string detail = "{";
            for (std::size_t i = 0; i < got.size(); ++i) detail += (i ? ", " : "") + got[i];
            detail += "}";
            report.claims.push_back({"fixed_points", match, detail});
        }

        const std::size_t max_steps = 2 * g.space.size() + 2;
        for (std::size_t i = 0; i < map.domain(); ++i) {
            const OrbitTrace trace = picard_iterate(g.space, map, PointId{i}, max_steps);
            OrbitSummary summary;
            summary.start = PointId{i};
            summary.length = trace.length();
            summary.cycle = trace.cycle;
            summary.left_domain = trace.left_domain;
            if (trace.cycle && trace.cycle->period == 1) summary.limit = trace.points[trace.cycle->entry];
            report.orbits.push_back(summary);
        }

        report.condition_a = check_condition_a(g.space, map, default_epsilon_grid(g.space));

        const PointId x0 = g.default_start.empty() ? PointId{0} : g.space.require(g.default_start);
        // Partial maps can cut the orbit before the requested horizon.
        const OrbitTrace probe = picard_iterate(g.space, map, x0, horizon);
        std::size_t b_horizon = horizon;
        if (!probe.cycle && probe.length() < horizon + 1) b_horizon = probe.length() - 1;
        if (b_horizon >= 2) {
            const auto grid = orbit_epsilon_grid(g.space, map, x0, b_horizon);
            if (!grid.empty())
                report.condition_b = check_condition_b(g.space, map, x0, grid, b_horizon);
        }
        if (g.expect_condition_b && report.condition_b) {
            report.claims.push_back({"condition_b", report.condition_b->holds,
                                     report.condition_b->holds ? "holds on the default grid"
                                                               : "refuted on the default grid"});
        }

        if (g.expect_orbit_bound) {
            report.bound = orbit_bound(g.space, map, x0, g.expect_orbit_bound_v, horizon);
            report.claims.push_back({"orbit_bound", report.bound->bound <= *g.expect_orbit_bound,
                                     report.bound->bound.to_string() + " vs documented " +
                                         g.expect_orbit_bound->to_string()});
        } else {
            report.bound = orbit_bound(g.space, map, x0, g.claimed.v(), horizon);
        }
    }

    report.upheld = std::all_of(report.claims.begin(), report.claims.end(),
                                [](const ClaimOutcome& c) { return c.upheld; });
    return report;
}

}  // namespace bvms

#endif
