#pragma once

#include <cstdint>

#include "focalbo/types.hpp"

namespace focalbo {

enum class KernelFamily { Matern52, Rbf };

/// Stationary-kernel hyperparameters plus the Gaussian observation noise.
/// Positive quantities are stored in log-space so optimizers can take
/// unconstrained steps.
struct KernelParams {
  Vector log_lengthscales;      // per input dimension
  double log_signal_variance = 0.0;
  double log_noise_variance = 0.0;

  static KernelParams from_values(const Vector& lengthscales, double signal_variance,
                                  double noise_variance);

  Eigen::Index dim() const { return log_lengthscales.size(); }
  double lengthscale(Eigen::Index k) const { return std::exp(log_lengthscales[k]); }
  Vector lengthscales() const { return log_lengthscales.array().exp(); }
  double signal_variance() const { return std::exp(log_signal_variance); }
  double noise_variance() const { return std::exp(log_noise_variance); }

  void validate(Eigen::Index input_dim) const;
};

/// Gradient of a kernel value with respect to (log-lengthscales, log-signal-variance).
struct KernelGrad {
  Vector log_lengthscales;
  double log_signal_variance = 0.0;
};

/// All pairwise quantities the ELBO backward pass needs for one point pair,
/// computed in a single evaluation (one exp).
struct KernelPairPartials {
  double value = 0.0;             // k(a, b)
  Vector d_log_lengthscales;      // dk / d log l_k
  double d_log_signal_variance = 0.0;
  Vector d_first_input;           // dk / da (dk/db is its negation)
};

double kernel_eval(const Vector& a, const Vector& b, const KernelParams& params,
                   KernelFamily family);

/// Cross-covariance matrix; entry (i, j) = k(A_i, B_j). Rows of A and B are points.
Matrix kernel_matrix(const Matrix& A, const Matrix& B, const KernelParams& params,
                     KernelFamily family);

/// k(x, x) for each row of A (= signal variance for stationary kernels).
Vector kernel_diag(const Matrix& A, const KernelParams& params);

KernelGrad kernel_grad(const Vector& a, const Vector& b, const KernelParams& params,
                       KernelFamily family);

/// dk(a, b)/da; finite at a == b.
Vector kernel_grad_input(const Vector& a, const Vector& b, const KernelParams& params,
                         KernelFamily family);

void kernel_pair_partials(const Vector& a, const Vector& b, const KernelParams& params,
                          KernelFamily family, bool want_input_grad,
                          KernelPairPartials& out);

struct CholeskyResult {
  Matrix L;            // lower triangular, L * L^T = M + jitter * I
  double jitter = 0.0; // the level that succeeded
};

/// Cholesky with an escalating jitter ladder {0, base, 10*base, ..., 1e4*base}.
/// base_jitter <= 0 selects 1e-6 times the mean diagonal.
CholeskyResult cholesky_with_jitter(const Matrix& M, double base_jitter = -1.0);

/// Count of scalar kernel evaluations since the last reset; used to assert
/// per-epoch work bounds in tests.
std::uint64_t kernel_op_count();
void reset_kernel_op_count();

}  // namespace focalbo
