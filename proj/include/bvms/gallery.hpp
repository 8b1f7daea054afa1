#ifndef BVMS_GALLERY_HPP
#define BVMS_GALLERY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvms/analysis.hpp"
#include "bvms/space.hpp"
#include "bvms/verify.hpp"

namespace bvms {

/// A constructed instance: the space, the class it claims (or, for the
/// synthetic families, a class certified at construction), the bundled
/// self-map when the family has one, and the documentation the battery
/// reports alongside results. `errata` records known discrepancies between
/// a family's documented claims and what the table actually yields;
/// refutations are surfaced there, never hidden.
struct GalleryInstance {
    std::string family;
    std::size_t size = 0;
    std::optional<std::uint64_t> seed;
    FiniteSpace space;
    MetricClass claimed;
    std::optional<SelfMap> map;
    bool map_partial = false;
    std::string default_start;  // canonical orbit start label ("" when no map)
    std::vector<std::string> classification;  // documented compactness notes, not adjudicated
    std::vector<std::string> errata;

    // Documented claims the adjudication battery checks:
    std::optional<bool> expect_contractive;
    std::optional<std::vector<std::string>> expect_fixed_points;
    std::optional<Rational> expect_orbit_bound;
    int expect_orbit_bound_v = 1;
    std::optional<bool> expect_condition_b;
};

/// Deterministic 64-bit generator (splitmix64). Fully specified so seeded
/// instances and golden files reproduce across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform-ish draw in [0, bound); bound sizes here make the modulo
    /// bias irrelevant.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// X = {1/n : 2 <= n <= N} united with {0, 1, 2}; within the reciprocal
/// block d = |n - m| except 1/2 when |n - m| is 1 or 3, the cross distance
/// is the denominator n, and distinct outer points sit at 5. Claims the
/// class (v=3, s=2).
inline GalleryInstance union_space(std::size_t N) {
    if (N < 2) throw SizeError("union_space needs N >= 2");
    std::vector<std::string> labels;
    std::vector<std::int64_t> dens;
    for (std::size_t n = 2; n <= N; ++n) {
        labels.push_back("1/" + std::to_string(n));
        dens.push_back(static_cast<std::int64_t>(n));
    }
    labels.insert(labels.end(), {"0", "1", "2"});
    const std::size_t k = dens.size();
    const std::size_t total = k + 3;

    auto d = [&](std::size_t i, std::size_t j) -> Rational {
        if (i == j) return Rational(0);
        if (i < k && j < k) {
            const std::int64_t gap = dens[i] > dens[j] ? dens[i] - dens[j] : dens[j] - dens[i];
            if (gap == 1 || gap == 3) return Rational(1, 2);
            return Rational(gap);
        }
        if (i < k) return Rational(dens[i]);
        if (j < k) return Rational(dens[j]);
        return Rational(5);
    };
    std::vector<std::vector<Rational>> table(total, std::vector<Rational>(total));
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) table[i][j] = d(i, j);

    GalleryInstance g{"union_space", N, std::nullopt, make_space(std::move(labels), table),
                      MetricClass(3, Rational(2))};
    g.classification = {"documented as boundedly compact and not sequentially compact",
                        "the documented general implication between the two notions runs the "
                        "other way; both statements are recorded as given, not adjudicated"};
    if (N >= 8) {
        g.errata.push_back(
            "claimed class (v=3, s=2) fails once denominators reach 8: d(1/2,1/8) = 6, yet the "
            "chain 1/2 -> 1/3 -> 1/4 -> 1/5 -> 1/8 costs 1/2 per leg (each gap is 1 or 3), so "
            "the bound would need s >= 6/2 = 3");
    }
    return g;
}

/// X = {1..N} with d = 10|x-y| when both are below 10, |x-y|/10 when both
/// are at least 10, and 5 otherwise; T sends x <= 10 to x + 20 and larger
/// points to 10. Claims the class (v=2, s=1000). N >= 30 keeps the
/// truncation closed under T.
inline GalleryInstance naturals_space(std::size_t N) {
    if (N < 30) throw SizeError("naturals_space needs N >= 30 so the truncation is closed under T");
    std::vector<std::string> labels;
    for (std::size_t x = 1; x <= N; ++x) labels.push_back(std::to_string(x));
    auto d = [&](std::size_t i, std::size_t j) -> Rational {
        const std::int64_t x = static_cast<std::int64_t>(i) + 1;
        const std::int64_t y = static_cast<std::int64_t>(j) + 1;
        if (x == y) return Rational(0);
        const std::int64_t gap = x > y ? x - y : y - x;
        if (x < 10 && y < 10) return Rational(10 * gap);
        if (x >= 10 && y >= 10) return Rational(gap, 10);
        return Rational(5);
    };
    std::vector<std::vector<Rational>> table(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) table[i][j] = d(i, j);

    std::vector<PointId> image;
    for (std::size_t i = 0; i < N; ++i) {
        const std::size_t x = i + 1;
        image.push_back(PointId{x <= 10 ? x + 20 - 1 : 10 - 1});
    }
    GalleryInstance g{"naturals_space", N, std::nullopt, make_space(std::move(labels), table),
                      MetricClass(2, Rational(1000))};
    g.map = make_self_map(g.space, std::move(image));
    g.default_start = "5";
    g.classification = {"documented as boundedly compact and not sequentially compact"};
    g.errata.push_back(
        "the documented contractivity case analysis takes d(x,y) = 5 whenever x > 10 >= y, but "
        "for x = 11, y = 10 both arguments are >= 10, so d(11,10) = 1/10 while "
        "d(T11,T10) = d(10,30) = 2; the map is not contractive at (11,10)");
    g.expect_contractive = true;  // the documented claim; the battery refutes it
    g.expect_fixed_points = std::vector<std::string>{};
    return g;
}

/// X = {1/n : 2 <= n <= N} with d = |n - m| except 1/2 for adjacent
/// denominators; T is the constant map to 1/4. Claims the class (v=3, s=3).
inline GalleryInstance reciprocal_space(std::size_t N) {
    if (N < 4) throw SizeError("reciprocal_space needs N >= 4 so the fixed point 1/4 is present");
    std::vector<std::string> labels;
    for (std::size_t n = 2; n <= N; ++n) labels.push_back("1/" + std::to_string(n));
    const std::size_t total = labels.size();
    auto d = [&](std::size_t i, std::size_t j) -> Rational {
        if (i == j) return Rational(0);
        const std::int64_t gap = i > j ? static_cast<std::int64_t>(i - j) : static_cast<std::int64_t>(j - i);
        return gap == 1 ? Rational(1, 2) : Rational(gap);
    };
    std::vector<std::vector<Rational>> table(total, std::vector<Rational>(total));
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) table[i][j] = d(i, j);

    GalleryInstance g{"reciprocal_space", N, std::nullopt, make_space(std::move(labels), table),
                      MetricClass(3, Rational(3))};
    const PointId quarter = g.space.require("1/4");
    g.map = SelfMap{std::vector<PointId>(total, quarter)};
    g.default_start = "1/2";
    g.classification = {"documented as boundedly compact and not sequentially compact"};
    g.expect_contractive = true;
    g.expect_fixed_points = std::vector<std::string>{"1/4"};
    return g;
}

/// Points are the indicator sequences e_1..e_N; d(e_i, e_j) is
/// 1 + 100/(i+j) when both indices are at most 10 and 1 + 10/(i+j)
/// otherwise (for i != j, the defining series collapses to i + j).
/// T shifts the index by 11, so on a truncation it is defined only on
/// e_1..e_{N-11}; the partiality is modelled explicitly rather than
/// wrapped around, since wrapping would fabricate fixed points.
/// Claims the class (v=2, s=10).
inline GalleryInstance unit_sequence_space(std::size_t N) {
    if (N < 12) throw SizeError("unit_sequence_space needs N >= 12 so the shift has a domain");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= N; ++i) labels.push_back("e" + std::to_string(i));
    auto d = [&](std::size_t i, std::size_t j) -> Rational {
        const std::int64_t a = static_cast<std::int64_t>(i) + 1;
        const std::int64_t b = static_cast<std::int64_t>(j) + 1;
        if (a == b) return Rational(0);
        if (a <= 10 && b <= 10) return Rational(1) + Rational(100, a + b);
        return Rational(1) + Rational(10, a + b);
    };
    std::vector<std::vector<Rational>> table(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) table[i][j] = d(i, j);

    GalleryInstance g{"unit_sequence_space", N, std::nullopt, make_space(std::move(labels), table),
                      MetricClass(2, Rational(10))};
    std::vector<PointId> image;
    for (std::size_t i = 0; i + 11 < N; ++i) image.push_back(PointId{i + 11});
    g.map = make_self_map(g.space, std::move(image));
    g.map_partial = true;
    g.default_start = "e1";
    g.classification = {"documented as complete and not boundedly compact"};
    g.expect_contractive = true;
    g.expect_fixed_points = std::vector<std::string>{};
    g.expect_orbit_bound = Rational(200);
    g.expect_orbit_bound_v = 2;
    return g;
}

/// Synthetic witness family: X = {1, 1/2, ..., 2^-K, 0} with the absolute
/// difference, T(x) = x/2 (the last positive point maps to 0). A genuine
/// metric, so the class (v=1, s=1) is certified at construction.
inline GalleryInstance halving_space(std::size_t K) {
    if (K < 2) throw SizeError("halving_space needs K >= 2");
    std::vector<Rational> values;
    Rational v(1);
    for (std::size_t k = 0; k <= K; ++k) {
        values.push_back(v);
        v = v * Rational(1, 2);
    }
    values.push_back(Rational(0));
    std::vector<std::string> labels;
    for (const Rational& value : values) labels.push_back(value.to_string());
    const std::size_t total = values.size();
    std::vector<std::vector<Rational>> table(total, std::vector<Rational>(total));
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) table[i][j] = abs(values[i] - values[j]);

    GalleryInstance g{"halving_space", K, std::nullopt, make_space(std::move(labels), table),
                      MetricClass(1, Rational(1))};
    g.claimed = certify_class(g.space, g.claimed);
    std::vector<PointId> image;
    for (std::size_t i = 0; i < total; ++i) image.push_back(PointId{i + 1 < total ? i + 1 : i});
    g.map = SelfMap{std::move(image)};
    g.default_start = "1";
    g.classification = {"synthetic: truncation of a compact genuine metric space"};
    g.expect_fixed_points = std::vector<std::string>{"0"};
    g.expect_condition_b = true;
    return g;
}

/// Seeded random table: off-diagonal entries k/10 with k uniform in 1..100,
/// symmetric, zero diagonal. Certified for the requested v by computing
/// min_s exactly.
inline GalleryInstance random_space(std::size_t n, std::uint64_t seed, int v = 1,
                                    const EnumerationBudget& budget = {}) {
    if (n < 2) throw SizeError("random_space needs n >= 2");
    SplitMix64 rng(seed);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational d(static_cast<std::int64_t>(1 + rng.below(100)), 10);
            table[i][j] = d;
            table[j][i] = d;
        }

    GalleryInstance g{"random_space", n, seed, make_space(std::move(labels), table),
                      MetricClass(v, Rational(1))};
    const Rational s = min_s(g.space, v, budget);
    g.claimed = MetricClass(v, s, MetricClass::Status::Claimed);
    g.claimed = certify_class(g.space, g.claimed, budget);
    g.classification = {"synthetic: seeded random table for property tests"};
    return g;
}

/// Rejection-samples maps until one passes check_contractive, falling back
/// to a constant map (always contractive on a space with positive
/// distances) after a bounded number of tries. Deterministic given seed.
inline SelfMap random_contractive_map(const FiniteSpace& space, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t n = space.size();
    constexpr int kMaxAttempts = 32;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<PointId> image;
        image.reserve(n);
        for (std::size_t i = 0; i < n; ++i) image.push_back(PointId{rng.below(n)});
        SelfMap candidate{std::move(image)};
        if (check_contractive(space, candidate).holds) return candidate;
    }
    return SelfMap{std::vector<PointId>(n, PointId{rng.below(n)})};
}

/// Families addressable from gallery documents and the command line.
inline GalleryInstance make_gallery(const std::string& name, std::size_t size,
                                    std::optional<std::uint64_t> seed = std::nullopt, int v = 1,
                                    const EnumerationBudget& budget = {}) {
    if (name == "union_space") return union_space(size);
    if (name == "naturals_space") return naturals_space(size);
    if (name == "reciprocal_space") return reciprocal_space(size);
    if (name == "unit_sequence_space") return unit_sequence_space(size);
    if (name == "halving_space") return halving_space(size);
    if (name == "random_space") return random_space(size, seed.value_or(0), v, budget);
    throw SizeError("unknown gallery family \"" + name + "\"");
}

}  // namespace bvms

#endif
