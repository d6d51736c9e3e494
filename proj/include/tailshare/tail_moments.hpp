#pragma once

#include <Eigen/Dense>

#include "tailshare/types.hpp"

namespace tailshare {

/// Numerically stable (q^t - p^t) / t for 0 < p < q <= 1.
///
/// The quotient has a removable singularity at t = 0 with limit log(q/p).
/// Below |t| = 1e-6 a Taylor expansion around the limit is used; above, the
/// quotient is evaluated as p^t * expm1(t * log(q/p)) / t, which avoids the
/// catastrophic cancellation of the naive difference for small |t|.
double stable_power_diff(double p, double q, double t);

/// Asymptotic mean of the scaled sum of order statistics between the top-p
/// and top-q percentiles of a Pareto tail: c * (q^{1-xi} - p^{1-xi}) / (1-xi).
double group_mean(double p, double q, const TailShape& shape);

/// Asymptotic variance of the sqrt(n)-scaled group sum for the same slice.
/// The (q^{1-2xi} - p^{1-2xi}) / (1-2xi) term goes through stable_power_diff,
/// so xi = 1/2 evaluates exactly at the log(q/p) limit.
double group_variance(double p, double q, const TailShape& shape);

/// K x K covariance matrix of the sqrt(n)-scaled group sums. Symmetric and
/// positive definite; throws DegeneracyError if the Cholesky check fails.
Eigen::MatrixXd group_covariance_matrix(const PercentileGrid& grid, const TailShape& shape);

/// Normalized group-mean ratios r_k(xi) =
/// (p_{k+1}^{1-xi} - p_k^{1-xi}) / (p_{K+1}^{1-xi} - p_K^{1-xi}), k = 1..K-1.
/// Free of the scale parameter c.
Eigen::VectorXd ratio_vector(const PercentileGrid& grid, double xi);

struct RatioJacobian {
    Eigen::VectorXd d_xi;   ///< derivative of ratio_vector with respect to xi
    Eigen::VectorXd d_alpha; ///< derivative with respect to alpha = 1/xi
};

/// Closed-form derivatives of the ratio vector, in both parameterizations
/// (d_alpha = -xi^2 * d_xi by the chain rule).
RatioJacobian ratio_jacobian(const PercentileGrid& grid, double xi);

/// Asymptotic covariance of the self-normalized share vector:
/// Omega(xi) = H Sigma H^T with H = [I_{K-1} -r] / mu_K, computed at c = 1
/// (Omega is invariant to c). Throws DegeneracyError if not numerically PD.
Eigen::MatrixXd omega_matrix(const PercentileGrid& grid, double xi);

/// All tail moments for one grid and shape, bundled.
struct GroupMomentModel {
    PercentileGrid grid;
    Eigen::VectorXd mu;     ///< K group means
    Eigen::MatrixXd sigma;  ///< K x K covariance
    Eigen::VectorXd r;      ///< K-1 ratios mu_k / mu_K
    Eigen::MatrixXd omega;  ///< (K-1) x (K-1) covariance of normalized shares
};

GroupMomentModel build_group_moment_model(const PercentileGrid& grid, const TailShape& shape);

namespace detail {

/// stable_power_diff on precomputed logs; hot-path variant without validation.
double power_diff_from_logs(double log_p, double log_q, double t);

/// Factor of a Cholesky decomposition, or throws DegeneracyError naming `what`.
Eigen::LLT<Eigen::MatrixXd> require_positive_definite(const Eigen::MatrixXd& m, const char* what);

} // namespace detail

} // namespace tailshare
