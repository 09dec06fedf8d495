#pragma once

#include "arraudit/core.hpp"
#include "arraudit/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace arraudit {

/// Homogeneous integer triple in canonical form: not all zero, gcd 1, first
/// nonzero entry positive. Shared representation of lines and points.
using Triple = std::array<Integer, 3>;

/// Canonicalize an arbitrary non-zero triple. Throws std::invalid_argument
/// on the zero triple.
Triple canonical_triple(Triple raw);

/// The line a*x + b*y + c*z = 0 in the projective plane.
class ProjectiveLine {
public:
    ProjectiveLine(Integer a, Integer b, Integer c);
    explicit ProjectiveLine(const Triple& coeffs);

    /// Clears denominators to the primitive integer form.
    static ProjectiveLine from_rational(const Rational& a, const Rational& b, const Rational& c);

    const Triple& coeffs() const { return coeffs_; }

    bool operator==(const ProjectiveLine& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const ProjectiveLine& other) const { return coeffs_ != other.coeffs_; }
    bool operator<(const ProjectiveLine& other) const { return coeffs_ < other.coeffs_; }

private:
    Triple coeffs_;
};

/// A point [x : y : z], same canonical form.
class ProjectivePoint {
public:
    ProjectivePoint(Integer x, Integer y, Integer z);
    explicit ProjectivePoint(const Triple& coords);

    const Triple& coords() const { return coords_; }

    bool operator==(const ProjectivePoint& other) const { return coords_ == other.coords_; }
    bool operator!=(const ProjectivePoint& other) const { return coords_ != other.coords_; }
    bool operator<(const ProjectivePoint& other) const { return coords_ < other.coords_; }

private:
    Triple coords_;
};

std::string to_string(const ProjectiveLine& line);
std::string to_string(const ProjectivePoint& point);

/// Exact incidence: the dot product of coordinates and coefficients is zero.
bool incident(const ProjectivePoint& point, const ProjectiveLine& line);

/// The unique common point of two distinct lines (cross product, canonical).
/// Throws std::invalid_argument when the lines are equal.
ProjectivePoint line_intersection(const ProjectiveLine& l1, const ProjectiveLine& l2);

/// Intersect all pairs of n >= 2 pairwise-distinct lines, group equal
/// points, and count a point where exactly r lines concur toward t_r. The
/// result always satisfies the pair-count identity. Throws
/// std::invalid_argument on fewer than 2 lines or duplicates.
ArrangementClass t_vector_from_lines(const std::vector<ProjectiveLine>& lines);

} // namespace arraudit
