#ifndef BVMS_VERIFY_HPP
#define BVMS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bvms/space.hpp"

namespace bvms {

/// A concrete witness falsifying the polygon inequality: an endpoint pair,
/// an ordered chain of v intermediates, and the two sides of the failed
/// comparison (lhs = d(x,y), rhs = s * chain sum).
struct ViolationReport {
    PointId x, y;
    std::vector<PointId> chain;
    Rational lhs;
    Rational rhs;
};

enum class Verdict { Certified, Refuted, Vacuous };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refuted: return "refuted";
        case Verdict::Vacuous: return "vacuous";
    }
    return "?";
}

struct CertificationResult {
    Verdict verdict = Verdict::Vacuous;
    std::optional<ViolationReport> witness;
    std::uint64_t tuples_checked = 0;
};

/// The chain attaining the maximal ratio d(x,y) / chain-sum.
struct ExtremalChain {
    PointId x, y;
    std::vector<PointId> chain;
    Rational distance;
    Rational chain_sum;
    Rational ratio;
};

struct MinSResult {
    Rational value = Rational(1);
    bool vacuous = false;
    std::optional<ExtremalChain> argmax;
    std::uint64_t tuples_checked = 0;
};

/// Brute force is the contract here; the guard keeps runs at desk scale.
/// Instances where n^(v+2) exceeds the budget are refused up front.
struct EnumerationBudget {
    std::uint64_t max_tuples = 1'000'000'000;
};

namespace detail {

inline std::uint64_t budget_estimate(std::size_t n, int v) {
    // n^(v+2), saturating.
    std::uint64_t r = 1;
    for (int k = 0; k < v + 2; ++k) {
        if (n != 0 && r > UINT64_MAX / n) return UINT64_MAX;
        r *= n;
    }
    return r;
}

inline void check_budget(std::size_t n, int v, const EnumerationBudget& budget) {
    const std::uint64_t estimate = budget_estimate(n, v);
    if (estimate > budget.max_tuples) throw BudgetExceededError(estimate, budget.max_tuples);
}

/// Enumerates every ordered tuple of `v` pairwise-distinct intermediates
/// avoiding the endpoints (i, j), in lexicographic order by point index,
/// calling fn(chain, chain_sum) per tuple. fn returns false to stop.
///
/// The endpoint pair is unordered (symmetry makes both directions
/// equivalent) but intermediate tuples are ordered: the chain sum depends
/// on the order of traversal.
template <typename Fn>
bool for_each_chain(const FiniteSpace& space, int v, PointId x, PointId y, Fn&& fn) {
    const std::size_t n = space.size();
    std::vector<PointId> chain(static_cast<std::size_t>(v));
    std::vector<bool> used(n, false);
    std::vector<Rational> prefix(static_cast<std::size_t>(v));

    // Depth-first odometer; prefix[d] holds the chain sum up to chain[d].
    std::size_t depth = 0;
    std::size_t candidate = 0;
    while (true) {
        if (candidate >= n) {
            if (depth == 0) return true;
            --depth;
            candidate = chain[depth].index;
            used[candidate] = false;
            ++candidate;
            continue;
        }
        if (candidate == x.index || candidate == y.index || used[candidate]) {
            ++candidate;
            continue;
        }
        const PointId u{candidate};
        const Rational leg = depth == 0 ? space.dist(x, u) : space.dist(chain[depth - 1], u);
        prefix[depth] = depth == 0 ? leg : prefix[depth - 1] + leg;
        chain[depth] = u;
        if (depth + 1 == static_cast<std::size_t>(v)) {
            const Rational total = prefix[depth] + space.dist(u, y);
            if (!fn(chain, total)) return false;
            ++candidate;
        } else {
            used[candidate] = true;
            ++depth;
            candidate = 0;
        }
    }
}

}  // namespace detail

/// Certifies or refutes the polygon inequality
///     d(x,y) <= s * [d(x,u1) + d(u1,u2) + ... + d(uv,y)]
/// for the given (v, s) by exhaustive enumeration over every unordered
/// endpoint pair x != y and every ordered tuple of v pairwise-distinct
/// intermediates avoiding both endpoints. Pairs with x = y are skipped:
/// d(x,x) = 0 makes the inequality trivial there.
///
/// The first violation in deterministic enumeration order (lexicographic
/// by endpoint pair, then by tuple) is returned as the witness. Spaces
/// with fewer than v+2 points are vacuous.
///
/// s may be any positive rational: values below 1 never certify a space
/// as a b_v(s) space in the definition's sense, but probing them is how
/// tightness of min_s is demonstrated.
inline CertificationResult verify_polygon(const FiniteSpace& space, int v, const Rational& s,
                                          const EnumerationBudget& budget = {}) {
    if (v < 1) throw ShapeError("verify_polygon needs v >= 1");
    if (!s.is_positive()) throw ShapeError("verify_polygon needs s > 0");
    const std::size_t n = space.size();
    CertificationResult result;
    if (n < static_cast<std::size_t>(v) + 2) {
        result.verdict = Verdict::Vacuous;
        return result;
    }
    detail::check_budget(n, v, budget);

    for (std::size_t i = 0; i < n && !result.witness; ++i) {
        for (std::size_t j = i + 1; j < n && !result.witness; ++j) {
            const PointId x{i}, y{j};
            const Rational& dxy = space.dist(x, y);
            detail::for_each_chain(space, v, x, y, [&](const std::vector<PointId>& chain, const Rational& sum) {
                ++result.tuples_checked;
                const Rational rhs = s * sum;
                if (dxy > rhs) {
                    result.witness = ViolationReport{x, y, chain, dxy, rhs};
                    return false;
                }
                return true;
            });
        }
    }
    result.verdict = result.witness ? Verdict::Refuted : Verdict::Certified;
    return result;
}

/// Least admissible s for the given v: the maximum of d(x,y) / chain-sum
/// over every endpoint pair and intermediate tuple, floored at 1 (the
/// definition requires s >= 1, so vacuous and slack spaces report 1).
/// Chain sums are strictly positive because distinct points have positive
/// distance.
inline MinSResult min_s_detail(const FiniteSpace& space, int v,
                               const EnumerationBudget& budget = {}) {
    if (v < 1) throw ShapeError("min_s needs v >= 1");
    const std::size_t n = space.size();
    MinSResult result;
    if (n < static_cast<std::size_t>(v) + 2) {
        result.vacuous = true;
        return result;
    }
    detail::check_budget(n, v, budget);

    std::optional<Rational> best;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const PointId x{i}, y{j};
            const Rational& dxy = space.dist(x, y);
            detail::for_each_chain(space, v, x, y, [&](const std::vector<PointId>& chain, const Rational& sum) {
                ++result.tuples_checked;
                const Rational ratio = dxy / sum;
                if (!best || ratio > *best) {
                    best = ratio;
                    result.argmax = ExtremalChain{x, y, chain, dxy, sum, ratio};
                }
                return true;
            });
        }
    }
    if (best && *best > Rational(1)) result.value = *best;
    return result;
}

inline Rational min_s(const FiniteSpace& space, int v, const EnumerationBudget& budget = {}) {
    return min_s_detail(space, v, budget).value;
}

/// Adjudicates a claimed class: certified or refuted per verify_polygon,
/// with vacuous mapping to certified.
inline MetricClass certify_class(const FiniteSpace& space, const MetricClass& claim,
                                 const EnumerationBudget& budget = {}) {
    const CertificationResult r = verify_polygon(space, claim.v(), claim.s(), budget);
    return claim.with_status(r.verdict == Verdict::Refuted ? MetricClass::Status::Refuted
                                                           : MetricClass::Status::Certified);
}

}  // namespace bvms

#endif
