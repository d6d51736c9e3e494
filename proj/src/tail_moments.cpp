#include "tailshare/tail_moments.hpp"

#include <cmath>
#include <vector>

namespace tailshare {

namespace {

constexpr double kTaylorThreshold = 1e-6;

void require_slice(double p, double q) {
    if (!(p > 0.0) || !(q > p) || !(q <= 1.0)) {
        throw InvalidInput("percentile slice requires 0 < p < q <= 1");
    }
}

} // namespace

namespace detail {

double power_diff_from_logs(double log_p, double log_q, double t) {
    const double dl = log_q - log_p;
    if (std::abs(t) < kTaylorThreshold) {
        // log(q/p) + t (log^2 q - log^2 p)/2 + t^2 (log^3 q - log^3 p)/6
        const double l2 = (log_q * log_q - log_p * log_p) / 2.0;
        const double l3 = (log_q * log_q * log_q - log_p * log_p * log_p) / 6.0;
        return dl + t * (l2 + t * l3);
    }
    return std::exp(t * log_p) * std::expm1(t * dl) / t;
}

Eigen::LLT<Eigen::MatrixXd> require_positive_definite(const Eigen::MatrixXd& m, const char* what) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
        throw DegeneracyError(std::string(what) +
                              " is not numerically positive definite (degenerate grid or shape)");
    }
    return llt;
}

} // namespace detail

double stable_power_diff(double p, double q, double t) {
    require_slice(p, q);
    if (!std::isfinite(t)) {
        throw InvalidInput("exponent t must be finite");
    }
    return detail::power_diff_from_logs(std::log(p), std::log(q), t);
}

double group_mean(double p, double q, const TailShape& shape) {
    require_slice(p, q);
    return shape.c() * detail::power_diff_from_logs(std::log(p), std::log(q), 1.0 - shape.xi());
}

namespace {

// sigma^2(p,q) given precomputed logs, at c = 1.
double variance_from_logs(double log_p, double log_q, double xi) {
    const double one_m_xi = 1.0 - xi;
    const double term1 = detail::power_diff_from_logs(log_p, log_q, 1.0 - 2.0 * xi);
    // p^{1-xi} (q^{-xi} - p^{-xi}) / xi = -p^{1-xi} * power_diff(-xi)
    const double a_p = std::exp(one_m_xi * log_p);
    const double term2 = -a_p * detail::power_diff_from_logs(log_p, log_q, -xi);
    // (2 p^{1-xi} q^{1-xi} - p^{2-2xi} - q^{2-2xi}) / (2-2xi) = -(q^{1-xi}-p^{1-xi})^2 / (2-2xi)
    const double diff_a = one_m_xi * detail::power_diff_from_logs(log_p, log_q, one_m_xi);
    const double term3 = -diff_a * diff_a / (2.0 * one_m_xi);
    return 2.0 * xi * xi / one_m_xi * (term1 + term2 + term3);
}

} // namespace

double group_variance(double p, double q, const TailShape& shape) {
    require_slice(p, q);
    return shape.c() * shape.c() * variance_from_logs(std::log(p), std::log(q), shape.xi());
}

Eigen::MatrixXd group_covariance_matrix(const PercentileGrid& grid, const TailShape& shape) {
    const auto K = static_cast<Eigen::Index>(grid.num_groups());
    const double xi = shape.xi();
    const double c2 = shape.c() * shape.c();

    std::vector<double> logp(grid.num_points());
    for (std::size_t i = 0; i < grid.num_points(); ++i) logp[i] = std::log(grid.point(i));

    Eigen::MatrixXd sigma(K, K);
    for (Eigen::Index k = 0; k < K; ++k) {
        sigma(k, k) = c2 * variance_from_logs(logp[k], logp[k + 1], xi);
    }
    for (Eigen::Index j = 0; j < K; ++j) {
        for (Eigen::Index k = j + 1; k < K; ++k) {
            const double mean_factor = detail::power_diff_from_logs(logp[j], logp[j + 1], 1.0 - xi);
            const double inner = -detail::power_diff_from_logs(logp[k], logp[k + 1], -xi) +
                                 detail::power_diff_from_logs(logp[k], logp[k + 1], 1.0 - xi);
            const double value = -c2 * xi * xi * mean_factor * inner;
            sigma(j, k) = value;
            sigma(k, j) = value;
        }
    }
    detail::require_positive_definite(sigma, "group covariance matrix");
    return sigma;
}

Eigen::VectorXd ratio_vector(const PercentileGrid& grid, double xi) {
    require_xi_in_domain(xi);
    const auto K = static_cast<Eigen::Index>(grid.num_groups());
    std::vector<double> logp(grid.num_points());
    for (std::size_t i = 0; i < grid.num_points(); ++i) logp[i] = std::log(grid.point(i));

    const double last = detail::power_diff_from_logs(logp[K - 1], logp[K], 1.0 - xi);
    Eigen::VectorXd r(K - 1);
    for (Eigen::Index k = 0; k < K - 1; ++k) {
        r(k) = detail::power_diff_from_logs(logp[k], logp[k + 1], 1.0 - xi) / last;
    }
    return r;
}

RatioJacobian ratio_jacobian(const PercentileGrid& grid, double xi) {
    require_xi_in_domain(xi);
    const auto K = static_cast<Eigen::Index>(grid.num_groups());
    const double one_m_xi = 1.0 - xi;
    const auto n = grid.num_points();
    std::vector<double> logp(n), a(n);
    for (std::size_t i = 0; i < n; ++i) {
        logp[i] = std::log(grid.point(i));
        a[i] = std::exp(one_m_xi * logp[i]);
    }
    // d/dxi log r_k = num_K/den_K - num_k/den_k with
    // num_k = p_{k+1}^{1-xi} log p_{k+1} - p_k^{1-xi} log p_k, den_k = p_{k+1}^{1-xi} - p_k^{1-xi}
    auto log_deriv_term = [&](std::size_t k) {
        const double num = a[k + 1] * logp[k + 1] - a[k] * logp[k];
        const double den = one_m_xi * detail::power_diff_from_logs(logp[k], logp[k + 1], one_m_xi);
        return num / den;
    };

    const Eigen::VectorXd r = ratio_vector(grid, xi);
    const double last_term = log_deriv_term(static_cast<std::size_t>(K) - 1);
    RatioJacobian jac;
    jac.d_xi.resize(K - 1);
    for (Eigen::Index k = 0; k < K - 1; ++k) {
        jac.d_xi(k) = r(k) * (last_term - log_deriv_term(static_cast<std::size_t>(k)));
    }
    jac.d_alpha = -xi * xi * jac.d_xi;
    return jac;
}

Eigen::MatrixXd omega_matrix(const PercentileGrid& grid, double xi) {
    return build_group_moment_model(grid, TailShape::from_xi(xi)).omega;
}

GroupMomentModel build_group_moment_model(const PercentileGrid& grid, const TailShape& shape) {
    const auto K = static_cast<Eigen::Index>(grid.num_groups());

    Eigen::VectorXd mu(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        mu(k) = group_mean(grid.point(static_cast<std::size_t>(k)),
                           grid.point(static_cast<std::size_t>(k) + 1), shape);
    }
    Eigen::MatrixXd sigma = group_covariance_matrix(grid, shape);
    Eigen::VectorXd r = mu.head(K - 1) / mu(K - 1);

    // H = [I_{K-1}  -r] / mu_K
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(K - 1, K);
    h.leftCols(K - 1) = Eigen::MatrixXd::Identity(K - 1, K - 1);
    h.col(K - 1) = -r;
    h /= mu(K - 1);

    Eigen::MatrixXd omega = h * sigma * h.transpose();
    omega = ((omega + omega.transpose()) / 2.0).eval();
    detail::require_positive_definite(omega, "normalized-share covariance");
    return GroupMomentModel{grid, std::move(mu), std::move(sigma), std::move(r), std::move(omega)};
}

} // namespace tailshare
