#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tailshare/errors.hpp"

namespace tailshare {

/// Inverse-exponent domain accepted by all shape-dependent operations.
/// The formulas degenerate at xi -> 0 (alpha -> infinity) and xi -> 1
/// (infinite-mean boundary), so we work on a clamped interval.
inline constexpr double kXiMin = 1e-4;
inline constexpr double kXiMax = 1.0 - 1e-4;

/// Ordered top percentiles p_1 < ... < p_{K+1} <= 1, as fractions.
/// The K groups are the slices between consecutive percentiles.
class PercentileGrid {
public:
    explicit PercentileGrid(std::vector<double> percentiles);

    const std::vector<double>& points() const { return p_; }
    double point(std::size_t k) const { return p_[k]; }

    /// Number of groups K (one less than the number of percentiles).
    std::size_t num_groups() const { return p_.size() - 1; }
    std::size_t num_points() const { return p_.size(); }

    /// Grid restricted to points [lo, hi] (0-based, inclusive).
    PercentileGrid subgrid(std::size_t lo, std::size_t hi) const;

    bool operator==(const PercentileGrid&) const = default;

private:
    std::vector<double> p_;
};

/// Pareto tail shape: xi = 1/alpha in (0,1), minimum size c > 0.
class TailShape {
public:
    static TailShape from_xi(double xi, double c = 1.0);
    static TailShape from_alpha(double alpha, double c = 1.0);

    double xi() const { return xi_; }
    double alpha() const { return alpha_; }
    double c() const { return c_; }

private:
    TailShape(double xi, double alpha, double c) : xi_(xi), alpha_(alpha), c_(c) {}
    double xi_;
    double alpha_;
    double c_;
};

/// Throws InvalidInput unless xi lies in [kXiMin, kXiMax].
void require_xi_in_domain(double xi);

} // namespace tailshare
