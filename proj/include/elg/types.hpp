#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace elg {

using Complex = std::complex<double>;

/// 4x4 complex matrix: the spin-1/2 realization of the group inside SL(4,C).
using Matrix4C = Eigen::Matrix4cd;
using Matrix2C = Eigen::Matrix2cd;
using Matrix3 = Eigen::Matrix3d;
using Matrix4 = Eigen::Matrix4d;
using Vector3 = Eigen::Vector3d;
using Vector4 = Eigen::Vector4d;
using Vector4C = Eigen::Vector4cd;
using Matrix10 = Eigen::Matrix<double, 10, 10>;
using Vector10 = Eigen::Matrix<double, 10, 1>;

/// Rejected input: out-of-range index, non-finite entries, malformed grid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure could not produce an answer within tolerance.
class SolverError : public std::runtime_error {
 public:
  enum class Kind {
    NotInGroup,      // input is not (numerically) a group element
    OutsideChart,    // group element with no W·L·R coordinates
    NotConverged,    // Gauss-Newton gave up
    IllConditioned,  // linear solve refused (condition number too large)
    Inconsistent,    // two independent routes disagree
  };

  SolverError(Kind kind, const std::string& what, double best_residual = 0.0)
      : std::runtime_error(what), kind_(kind), best_residual_(best_residual) {}

  Kind kind() const noexcept { return kind_; }
  double best_residual() const noexcept { return best_residual_; }

 private:
  Kind kind_;
  double best_residual_;
};

const char* to_string(SolverError::Kind kind) noexcept;

}  // namespace elg
