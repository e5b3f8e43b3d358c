#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace focalbo {

inline constexpr const char* kVersion = "0.1.0";

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Shape or dimension mismatch between inputs.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input outside the unit hypercube or an otherwise invalid domain value.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A matrix failed to factor even after the full jitter ladder.
struct NotPositiveDefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Training produced a non-finite objective or gradient.
struct TrainingDivergedError : std::runtime_error {
  TrainingDivergedError(const std::string& what, int epoch_index)
      : std::runtime_error(what), epoch(epoch_index) {}
  int epoch;
};

/// Generic numeric failure (non-finite value in a closed-form computation).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Paired inputs in [0,1]^d and scalar noisy observations.
struct Dataset {
  Matrix X;  // n x d, rows are points
  Vector y;  // n

  Eigen::Index n() const { return X.rows(); }
  Eigen::Index dim() const { return X.cols(); }

  void validate() const {
    if (X.rows() != y.size())
      throw ShapeError("Dataset: X rows (" + std::to_string(X.rows()) +
                       ") != y size (" + std::to_string(y.size()) + ")");
    if (!X.allFinite() || !y.allFinite())
      throw NumericError("Dataset: non-finite entries");
  }

  void append(const Matrix& X_new, const Vector& y_new) {
    if (X_new.cols() != X.cols()) throw ShapeError("Dataset::append: dimension mismatch");
    if (X_new.rows() != y_new.size()) throw ShapeError("Dataset::append: row count mismatch");
    const Eigen::Index old_n = X.rows();
    X.conservativeResize(old_n + X_new.rows(), Eigen::NoChange);
    y.conservativeResize(old_n + y_new.size());
    X.bottomRows(X_new.rows()) = X_new;
    y.tail(y_new.size()) = y_new;
  }
};

/// Gaussian over function values at a finite list of test points.
struct PosteriorGaussian {
  Matrix points;  // t x d
  Vector mean;    // t
  Matrix cov;     // t x t, symmetric

  Eigen::Index size() const { return mean.size(); }
};

/// Marginal (pointwise) posterior, cheaper than the full joint.
struct Marginals {
  Vector mean;
  Vector var;
};

}  // namespace focalbo
