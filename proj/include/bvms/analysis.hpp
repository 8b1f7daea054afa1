#ifndef BVMS_ANALYSIS_HPP
#define BVMS_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bvms/picard.hpp"
#include "bvms/space.hpp"

namespace bvms {

struct ContractivityViolation {
    PointId x, y;
    Rational before;  // d(x, y)
    Rational after;   // d(Tx, Ty) >= before
};

struct ContractivityReport {
    bool holds = true;
    std::vector<ContractivityViolation> violations;
};

/// Checks d(Tx,Ty) < d(x,y) for every unordered pair of distinct points
/// in the map's domain, listing every violating pair in index order.
inline ContractivityReport check_contractive(const FiniteSpace& space, const SelfMap& map) {
    ContractivityReport report;
    const std::size_t n = map.domain();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const PointId x{i}, y{j};
            const Rational& before = space.dist(x, y);
            const Rational& after = space.dist(map(x), map(y));
            if (!(after < before)) report.violations.push_back({x, y, before, after});
        }
    }
    report.holds = report.violations.empty();
    return report;
}

/// All x in the map's domain with Tx = x, in index order.
inline std::vector<PointId> find_fixed_points(const FiniteSpace& space, const SelfMap& map) {
    (void)space;
    std::vector<PointId> fixed;
    for (std::size_t i = 0; i < map.domain(); ++i)
        if (map(PointId{i}) == PointId{i}) fixed.push_back(PointId{i});
    return fixed;
}

/// Maximal admissible delta for one epsilon, or the reason there is none.
/// Unconstrained means no pair trips the bound at all (any delta works);
/// Absent means no positive delta exists.
struct DeltaEntry {
    enum class Kind { Value, Unconstrained, Absent };
    Rational epsilon;
    Kind kind = Kind::Absent;
    Rational delta;  // meaningful only when kind == Value; then delta > 0
};

struct ConditionWitness {
    std::size_t i = 0, j = 0;  // point indices (condition A) or orbit indices (condition B)
    Rational before;
    Rational after;
    Rational epsilon;
};

struct ConditionReport {
    std::vector<DeltaEntry> delta_at;
    bool holds = false;
    std::optional<ConditionWitness> witness;
    bool orbital = false;      // true for condition B
    std::size_t horizon = 0;   // condition B only; bounds the checked scope
};

/// Sorted grid of probe epsilons: every distinct positive value plus each
/// value shrunk by the given factor. delta(epsilon) is piecewise constant
/// with breakpoints at realized distances, so this grid covers every
/// behavior the scope can show.
inline std::vector<Rational> epsilon_grid_from_values(std::vector<Rational> values,
                                                      const Rational& shrink = Rational(1, 2)) {
    std::vector<Rational> grid;
    for (const Rational& value : values) {
        if (!value.is_positive()) continue;
        grid.push_back(value);
        const Rational shrunk = value * shrink;
        if (shrunk.is_positive()) grid.push_back(shrunk);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

inline std::vector<Rational> default_epsilon_grid(const FiniteSpace& space) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = i + 1; j < space.size(); ++j) values.push_back(space.dist(i, j));
    return epsilon_grid_from_values(std::move(values));
}

namespace detail {

// Shared delta computation: for each epsilon, over pairs supplied by
// for_each_pair(fn) with fn(i, j, before, after), the maximal delta such
// that before < epsilon + delta forces after <= epsilon.
template <typename ForEachPair>
ConditionReport condition_report(const std::vector<Rational>& grid, ForEachPair&& for_each_pair) {
    if (grid.empty()) throw ShapeError("epsilon grid must be nonempty");
    for (const Rational& e : grid)
        if (!e.is_positive()) throw ShapeError("epsilon grid values must be positive");

    ConditionReport report;
    report.holds = true;
    for (const Rational& epsilon : grid) {
        DeltaEntry entry;
        entry.epsilon = epsilon;
        bool any_failing = false;
        bool absent = false;
        std::optional<Rational> min_margin;
        for_each_pair([&](std::size_t i, std::size_t j, const Rational& before, const Rational& after) {
            if (!(after > epsilon)) return;
            any_failing = true;
            if (before <= epsilon) {
                if (!absent && !report.witness)
                    report.witness = ConditionWitness{i, j, before, after, epsilon};
                absent = true;
                return;
            }
            const Rational margin = before - epsilon;
            if (!min_margin || margin < *min_margin) min_margin = margin;
        });
        if (!any_failing) {
            entry.kind = DeltaEntry::Kind::Unconstrained;
        } else if (absent) {
            entry.kind = DeltaEntry::Kind::Absent;
            report.holds = false;
        } else {
            entry.kind = DeltaEntry::Kind::Value;
            entry.delta = *min_margin;
        }
        report.delta_at.push_back(entry);
    }
    return report;
}

}  // namespace detail

/// Uniform condition over point pairs: for each epsilon, the largest delta
/// with d(x,y) < epsilon + delta  =>  d(Tx,Ty) <= epsilon, over every pair
/// in the map's domain. Exact on finite spaces, not an approximation.
inline ConditionReport check_condition_a(const FiniteSpace& space, const SelfMap& map,
                                         const std::vector<Rational>& epsilon_grid) {
    const std::size_t n = map.domain();
    return detail::condition_report(epsilon_grid, [&](auto&& fn) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const PointId x{i}, y{j};
                fn(i, j, space.dist(x, y), space.dist(map(x), map(y)));
            }
    });
}

namespace detail {

inline OrbitTrace orbit_for_horizon(const FiniteSpace& space, const SelfMap& map, PointId x0,
                                    std::size_t horizon) {
    OrbitTrace trace = picard_iterate(space, map, x0, horizon);
    if (!trace.cycle && trace.length() < horizon + 1)
        throw OrbitTooShortError(trace.length(), horizon + 1);
    return trace;
}

}  // namespace detail

/// The orbitwise variant: the same delta computation quantified over pairs
/// (i, j), 0 <= i < j < horizon, of iterates of x0. This is a desk-scale
/// check: holds means no refutation within the horizon, and the report
/// carries the horizon so a pass cannot be quoted as a proof.
inline ConditionReport check_condition_b(const FiniteSpace& space, const SelfMap& map, PointId x0,
                                         const std::vector<Rational>& epsilon_grid,
                                         std::size_t horizon) {
    if (horizon < 2) throw ShapeError("check_condition_b needs horizon >= 2");
    const OrbitTrace trace = detail::orbit_for_horizon(space, map, x0, horizon);
    ConditionReport report = detail::condition_report(epsilon_grid, [&](auto&& fn) {
        for (std::size_t i = 0; i + 1 < horizon; ++i)
            for (std::size_t j = i + 1; j < horizon; ++j) {
                const PointId xi = *trace.point_at(i), xj = *trace.point_at(j);
                const PointId si = *trace.point_at(i + 1), sj = *trace.point_at(j + 1);
                fn(i, j, space.dist(xi, xj), space.dist(si, sj));
            }
    });
    report.orbital = true;
    report.horizon = horizon;
    return report;
}

/// Orbit pair distances d(x_i, x_j) for 0 <= i < j <= horizon; the default
/// probe scope for condition B.
inline std::vector<Rational> orbit_epsilon_grid(const FiniteSpace& space, const SelfMap& map,
                                                PointId x0, std::size_t horizon) {
    const OrbitTrace trace = detail::orbit_for_horizon(space, map, x0, horizon);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < horizon; ++i)
        for (std::size_t j = i + 1; j <= horizon; ++j)
            values.push_back(space.dist(*trace.point_at(i), *trace.point_at(j)));
    return epsilon_grid_from_values(std::move(values));
}

struct BoundReport {
    int v = 1;
    std::size_t horizon_requested = 0;
    std::size_t horizon_effective = 0;  // < requested only when a partial map cut the orbit
    Rational bound;
    std::size_t attained_at = 0;
};

/// bound = max over 0 <= m < horizon of d(x0, T^m x0). Partial maps may
/// end the orbit early; the report then carries the effective horizon.
inline BoundReport orbit_bound(const FiniteSpace& space, const SelfMap& map, PointId x0, int v,
                               std::size_t horizon) {
    if (horizon < 1) throw ShapeError("orbit_bound needs horizon >= 1");
    const OrbitTrace trace = picard_iterate(space, map, x0, horizon);
    BoundReport report;
    report.v = v;
    report.horizon_requested = horizon;
    report.horizon_effective = trace.cycle ? horizon : std::min(horizon, trace.length());
    for (std::size_t m = 0; m < report.horizon_effective; ++m) {
        const Rational d = space.dist(x0, *trace.point_at(m));
        if (d > report.bound) {
            report.bound = d;
            report.attained_at = m;
        }
    }
    return report;
}

}  // namespace bvms

#endif
