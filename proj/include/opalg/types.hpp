#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace opalg {

using Complex = std::complex<double>;

/// Dense complex matrix, the carrier for every operator in the toolkit.
using ComplexMatrix = Eigen::MatrixXcd;

using Index = Eigen::Index;

/// Relative tolerances shared by all numerical predicates.
///
/// rank_cutoff_rel controls the numerical-rank convention: a singular value
/// sigma is treated as zero when sigma < rank_cutoff_rel * sigma_max * max(rows, cols).
/// psd_slack_rel is the amount of negative spectrum tolerated (and clamped)
/// when a matrix is required to be positive semidefinite. residual_rel bounds
/// the acceptable relative residual of reconstructed identities.
struct Tolerance {
    double rank_cutoff_rel = 1e-12;
    double psd_slack_rel = 1e-9;
    double residual_rel = 1e-9;

    [[nodiscard]] bool valid() const {
        auto ok = [](double x) { return x >= 0.0 && x < 1.0; };
        return ok(rank_cutoff_rel) && ok(psd_slack_rel) && ok(residual_rel);
    }
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class NotHermitian : public Error {
  public:
    using Error::Error;
};

class NotPositive : public Error {
  public:
    using Error::Error;
};

class NotEqualGram : public Error {
  public:
    using Error::Error;
};

class EmptyList : public Error {
  public:
    using Error::Error;
};

class NotContraction : public Error {
  public:
    using Error::Error;
};

class NotInIntersection : public Error {
  public:
    using Error::Error;
};

class MajorizationFails : public Error {
  public:
    using Error::Error;
};

class NotPartitionOfUnity : public Error {
  public:
    using Error::Error;
};

class NotNormal : public Error {
  public:
    using Error::Error;
};

class BadReference : public Error {
  public:
    using Error::Error;
};

class InvalidDimension : public Error {
  public:
    using Error::Error;
};

/// Violations of preconditions that have no dedicated error category.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

}  // namespace opalg
