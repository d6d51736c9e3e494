#include "tailshare/types.hpp"

#include <cmath>
#include <string>

namespace tailshare {

void require_xi_in_domain(double xi) {
    if (!(xi >= kXiMin && xi <= kXiMax)) {
        throw InvalidInput("xi = " + std::to_string(xi) + " outside accepted domain [" +
                           std::to_string(kXiMin) + ", " + std::to_string(kXiMax) + "]");
    }
}

PercentileGrid::PercentileGrid(std::vector<double> percentiles) : p_(std::move(percentiles)) {
    if (p_.size() < 3) {
        throw InvalidInput("percentile grid needs at least 3 points (K >= 2), got " +
                           std::to_string(p_.size()));
    }
    double prev = 0.0;
    for (double x : p_) {
        if (!std::isfinite(x) || x <= prev) {
            throw InvalidInput("percentiles must be finite, positive, and strictly increasing");
        }
        prev = x;
    }
    if (p_.back() > 1.0) {
        throw InvalidInput("largest percentile must be <= 1, got " + std::to_string(p_.back()));
    }
}

PercentileGrid PercentileGrid::subgrid(std::size_t lo, std::size_t hi) const {
    if (lo >= hi || hi >= p_.size()) {
        throw InvalidInput("invalid subgrid range");
    }
    return PercentileGrid(std::vector<double>(p_.begin() + static_cast<std::ptrdiff_t>(lo),
                                              p_.begin() + static_cast<std::ptrdiff_t>(hi) + 1));
}

TailShape TailShape::from_xi(double xi, double c) {
    require_xi_in_domain(xi);
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw InvalidInput("minimum size c must be positive and finite");
    }
    return TailShape(xi, 1.0 / xi, c);
}

TailShape TailShape::from_alpha(double alpha, double c) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidInput("alpha must be positive and finite");
    }
    return from_xi(1.0 / alpha, c);
}

} // namespace tailshare
