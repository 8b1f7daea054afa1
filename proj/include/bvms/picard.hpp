#ifndef BVMS_PICARD_HPP
#define BVMS_PICARD_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bvms/space.hpp"

namespace bvms {

struct CycleInfo {
    std::size_t entry = 0;   // index of the first point that repeats
    std::size_t period = 0;  // >= 1
};

/// The orbit x0, Tx0, T^2 x0, ... with per-step distances.
///
/// Iteration stops at the first repeated point (the repeat occurrence is
/// kept in the list, so points[entry + period] == points[entry]), at the
/// step limit, or where a partial map has no image. Once a cycle is
/// recorded, point_at() resolves arbitrary indices through it, so tail
/// properties of the infinite orbit are decidable.
struct OrbitTrace {
    PointId start;
    std::vector<PointId> points;
    std::vector<Rational> step_dist;
    std::optional<CycleInfo> cycle;
    bool left_domain = false;  // a partial map had no image for the last point

    std::size_t length() const { return points.size(); }

    std::optional<PointId> point_at(std::size_t n) const {
        if (n < points.size()) return points[n];
        if (!cycle) return std::nullopt;
        return points[cycle->entry + (n - cycle->entry) % cycle->period];
    }
};

inline OrbitTrace picard_iterate(const FiniteSpace& space, const SelfMap& map, PointId x0,
                                 std::size_t max_steps) {
    if (max_steps < 1) throw ShapeError("picard_iterate needs max_steps >= 1");
    if (x0.index >= space.size()) throw ShapeError("start point out of range");

    OrbitTrace trace;
    trace.start = x0;
    trace.points.push_back(x0);
    std::unordered_map<std::size_t, std::size_t> first_seen{{x0.index, 0}};

    PointId current = x0;
    for (std::size_t step = 0; step < max_steps; ++step) {
        if (!map.defined_at(current)) {
            trace.left_domain = true;
            break;
        }
        const PointId next = map(current);
        trace.step_dist.push_back(space.dist(current, next));
        trace.points.push_back(next);
        const auto [it, inserted] = first_seen.emplace(next.index, trace.points.size() - 1);
        if (!inserted) {
            trace.cycle = CycleInfo{it->second, trace.points.size() - 1 - it->second};
            break;
        }
        current = next;
    }
    return trace;
}

struct CauchyWitness {
    std::size_t n = 0;
    std::size_t p = 0;
    Rational value;
};

struct CauchyReport {
    bool is_cauchy = false;
    Rational tolerance;
    std::size_t tail_start = 0;
    std::size_t max_p = 0;
    std::optional<CauchyWitness> witness;
};

/// Checks d(x_n, x_{n+p}) < tolerance for all n > tail_start and all
/// 1 <= p <= max_p. With a recorded cycle the tail is eventually periodic,
/// so finitely many n decide every n > tail_start; without one the trace
/// window must physically cover tail_start + 1 + max_p points.
inline CauchyReport cauchy_check(const FiniteSpace& space, const OrbitTrace& trace,
                                 const Rational& tolerance, std::size_t tail_start,
                                 std::size_t max_p) {
    if (max_p < 1) throw ShapeError("cauchy_check needs max_p >= 1");
    CauchyReport report;
    report.tolerance = tolerance;
    report.tail_start = tail_start;
    report.max_p = max_p;

    std::size_t last_n;
    if (trace.cycle) {
        // Beyond the cycle entry, d(x_n, x_{n+p}) depends only on n's
        // residue mod the period, so one period's worth of n suffices.
        const std::size_t base = std::max(tail_start + 1, trace.cycle->entry);
        last_n = base + trace.cycle->period - 1;
    } else {
        if (trace.length() < tail_start + 1 + max_p + 1)
            throw WindowTooShortError(trace.length(), tail_start + 1 + max_p + 1);
        last_n = trace.length() - 1 - max_p;
    }

    for (std::size_t n = tail_start + 1; n <= last_n; ++n) {
        for (std::size_t p = 1; p <= max_p; ++p) {
            const auto a = trace.point_at(n);
            const auto b = trace.point_at(n + p);
            const Rational d = space.dist(*a, *b);
            if (!(d < tolerance)) {
                report.witness = CauchyWitness{n, p, d};
                report.is_cauchy = false;
                return report;
            }
        }
    }
    report.is_cauchy = true;
    return report;
}

struct ConvergenceResult {
    bool converged = false;
    std::optional<std::size_t> first_index;
};

/// Converged iff d(x_n, z) < tolerance for every n beyond some index;
/// first_index is the least such index. Traces with a cycle decide the
/// infinite tail; traces without one are judged on the window alone.
inline ConvergenceResult convergence_check(const FiniteSpace& space, const OrbitTrace& trace,
                                           PointId z, const Rational& tolerance) {
    if (trace.cycle) {
        for (std::size_t k = 0; k < trace.cycle->period; ++k) {
            const PointId p = trace.points[trace.cycle->entry + k];
            if (!(space.dist(p, z) < tolerance)) return {false, std::nullopt};
        }
    }
    // Last explicit index failing the tolerance bounds first_index below.
    std::size_t first = 0;
    for (std::size_t n = 0; n < trace.length(); ++n)
        if (!(space.dist(trace.points[n], z) < tolerance)) first = n + 1;
    if (!trace.cycle && first >= trace.length()) return {false, std::nullopt};
    return {true, first};
}

/// Per-orbit descent diagnostics. The gap sequences cover the whole
/// recorded window; the to_fixed sequence d(x_n, z) is present only when
/// a period-1 cycle pins a fixed point z. Flags report what the window
/// shows, never an extrapolated limit:
///   - gap1_decreasing: non-strict descent of d(x_n, x_{n+1}) end to end.
///   - *_vanishing: the final value is below the tolerance.
///   - to_fixed_strictly_decreasing: d(x_n, z) strictly falls until the
///     orbit arrives at z.
struct OrbitDiagnostics {
    std::vector<Rational> gap1;
    std::vector<Rational> gap2;
    std::optional<std::vector<Rational>> to_fixed;
    std::optional<PointId> fixed_point;
    bool gap1_decreasing = false;
    bool gap1_vanishing = false;
    bool gap2_vanishing = false;
    bool to_fixed_strictly_decreasing = false;
    Rational tolerance;
};

inline OrbitDiagnostics orbit_diagnostics(const FiniteSpace& space, const OrbitTrace& trace,
                                          const Rational& tolerance = Rational(1, 1000)) {
    OrbitDiagnostics diag;
    diag.tolerance = tolerance;
    const std::size_t len = trace.length();
    for (std::size_t n = 0; n + 1 < len; ++n)
        diag.gap1.push_back(space.dist(trace.points[n], trace.points[n + 1]));
    for (std::size_t n = 0; n + 2 < len; ++n)
        diag.gap2.push_back(space.dist(trace.points[n], trace.points[n + 2]));

    diag.gap1_decreasing = true;
    for (std::size_t n = 0; n + 1 < diag.gap1.size(); ++n)
        if (diag.gap1[n] < diag.gap1[n + 1]) diag.gap1_decreasing = false;
    diag.gap1_vanishing = !diag.gap1.empty() && diag.gap1.back() < tolerance;
    diag.gap2_vanishing = !diag.gap2.empty() && diag.gap2.back() < tolerance;

    if (trace.cycle && trace.cycle->period == 1) {
        const PointId z = trace.points[trace.cycle->entry];
        diag.fixed_point = z;
        std::vector<Rational> s;
        s.reserve(len);
        for (const PointId p : trace.points) s.push_back(space.dist(p, z));
        diag.to_fixed_strictly_decreasing = true;
        for (std::size_t n = 0; n + 1 < s.size(); ++n) {
            if (trace.points[n] == z) break;  // arrived; the tail stays at 0
            if (!(s[n + 1] < s[n])) diag.to_fixed_strictly_decreasing = false;
        }
        diag.to_fixed = std::move(s);
    }
    return diag;
}

struct BoundednessReport {
    bool bounded = true;  // a finite window always is; M is the point
    Rational max_distance;
};

/// M = max over represented n, m of d(x_n, x_m). A recorded cycle adds no
/// new points, so the window maximum equals the whole orbit's.
inline BoundednessReport boundedness_check(const FiniteSpace& space, const OrbitTrace& trace) {
    BoundednessReport report;
    for (std::size_t i = 0; i < trace.length(); ++i)
        for (std::size_t j = i + 1; j < trace.length(); ++j) {
            const Rational d = space.dist(trace.points[i], trace.points[j]);
            if (d > report.max_distance) report.max_distance = d;
        }
    return report;
}

/// Plot-data export: one row per step index with the gap and (when a fixed
/// point is known) the distance to it, as decimals for external tools.
inline void write_orbit_csv(std::ostream& os, const FiniteSpace& space, const OrbitTrace& trace,
                            const OrbitDiagnostics& diag) {
    os << "n,point,step_dist,dist_to_fixed\n";
    for (std::size_t n = 0; n < trace.length(); ++n) {
        os << n << "," << space.label(trace.points[n]) << ",";
        if (n < diag.gap1.size()) os << diag.gap1[n].to_double();
        os << ",";
        if (diag.to_fixed && n < diag.to_fixed->size()) os << (*diag.to_fixed)[n].to_double();
        os << "\n";
    }
}

}  // namespace bvms

#endif
