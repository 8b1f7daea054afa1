#ifndef BVMS_SPACE_HPP
#define BVMS_SPACE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvms/errors.hpp"
#include "bvms/rational.hpp"

namespace bvms {

/// Index of a point in a space's point list.
struct PointId {
    std::size_t index = 0;
    friend bool operator==(PointId, PointId) = default;
    friend std::strong_ordering operator<=>(PointId, PointId) = default;
};

/// A named point set with an exact, symmetric, positive-definite distance
/// table. Whether the table also satisfies the polygon inequality for some
/// (v, s) is a separate question answered by verify_polygon.
///
/// Immutable after construction; safe to share across threads.
class FiniteSpace {
public:
    std::size_t size() const { return labels_.size(); }

    const Rational& dist(PointId a, PointId b) const { return dist_[a.index * size() + b.index]; }
    const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }

    const std::string& label(PointId p) const { return labels_[p.index]; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<PointId> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return PointId{i};
        return std::nullopt;
    }

    PointId require(const std::string& label) const {
        if (auto p = index_of(label)) return *p;
        throw UnknownLabelError(label);
    }

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
        return a.labels_ == b.labels_ && a.dist_ == b.dist_;
    }

    friend FiniteSpace make_space(std::vector<std::string> labels,
                                  const std::vector<std::vector<Rational>>& dist);
    friend FiniteSpace scale_space(const FiniteSpace& space, const Rational& c);

private:
    FiniteSpace(std::vector<std::string> labels, std::vector<Rational> flat)
        : labels_(std::move(labels)), dist_(std::move(flat)) {}

    std::vector<std::string> labels_;
    std::vector<Rational> dist_;  // row-major size() x size()
};

/// Validates the table against the identity and symmetry axioms:
/// d(x,x) = 0, d(x,y) = d(y,x), and d(x,y) > 0 for x != y.
inline FiniteSpace make_space(std::vector<std::string> labels,
                              const std::vector<std::vector<Rational>>& dist) {
    const std::size_t n = labels.size();
    if (dist.size() != n)
        throw ShapeError("distance table has " + std::to_string(dist.size()) + " rows for " +
                         std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i)
        if (dist[i].size() != n)
            throw ShapeError("row " + std::to_string(i) + " has " + std::to_string(dist[i].size()) +
                             " entries, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!dist[i][i].is_zero())
            throw IdentityError(i, i, "d(" + labels[i] + ", " + labels[i] + ") = " +
                                          dist[i][i].to_string() + ", expected 0");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j].is_negative()) throw NegativeDistanceError(i, j, labels[i], labels[j]);
            if (dist[i][j] != dist[j][i]) throw AsymmetryError(i, j, labels[i], labels[j]);
            if (dist[i][j].is_zero())
                throw IdentityError(i, j, "d(" + labels[i] + ", " + labels[j] +
                                              ") = 0 for distinct points");
        }
    }
    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (const auto& row : dist)
        for (const auto& value : row) flat.push_back(value);
    return FiniteSpace(std::move(labels), std::move(flat));
}

/// Multiplies every distance by c > 0. Axioms are preserved exactly.
inline FiniteSpace scale_space(const FiniteSpace& space, const Rational& c) {
    if (!c.is_positive()) throw NonPositiveScaleError();
    std::vector<Rational> flat;
    flat.reserve(space.size() * space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j) flat.push_back(space.dist(i, j) * c);
    return FiniteSpace(space.labels_, std::move(flat));
}

/// A claimed or certified class (v, s) for a space.
class MetricClass {
public:
    enum class Status { Claimed, Certified, Refuted };

    MetricClass(int v, Rational s, Status status = Status::Claimed)
        : v_(v), s_(std::move(s)), status_(status) {
        if (v_ < 1) throw ShapeError("metric class needs v >= 1");
        if (s_ < Rational(1)) throw ShapeError("metric class needs s >= 1");
    }

    int v() const { return v_; }
    const Rational& s() const { return s_; }
    Status status() const { return status_; }

    MetricClass with_status(Status status) const { return MetricClass(v_, s_, status); }

private:
    int v_;
    Rational s_;
    Status status_;
};

inline const char* to_string(MetricClass::Status s) {
    switch (s) {
        case MetricClass::Status::Claimed: return "claimed";
        case MetricClass::Status::Certified: return "certified";
        case MetricClass::Status::Refuted: return "refuted";
    }
    return "?";
}

/// A self-map given as an image table over a prefix of the point list.
/// Total maps have domain() == space.size(); gallery families built from
/// truncations of shift maps may be partial, with the domain recorded
/// explicitly rather than wrapped around.
struct SelfMap {
    std::vector<PointId> image;

    std::size_t domain() const { return image.size(); }
    bool total_on(const FiniteSpace& space) const { return image.size() == space.size(); }
    bool defined_at(PointId p) const { return p.index < image.size(); }
    PointId operator()(PointId p) const { return image[p.index]; }
};

inline SelfMap make_self_map(const FiniteSpace& space, std::vector<PointId> image) {
    if (image.size() > space.size())
        throw ShapeError("map table has " + std::to_string(image.size()) + " entries for a space of " +
                         std::to_string(space.size()) + " points");
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i].index >= space.size())
            throw ShapeError("image of point " + space.label(i) + " is out of range");
    return SelfMap{std::move(image)};
}

}  // namespace bvms

#endif
