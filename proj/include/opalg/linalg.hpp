#pragma once

#include "opalg/types.hpp"

namespace opalg {

/// Singular value decomposition m = u * diag(singular_values) * v^*.
/// Singular values are descending; u and v carry the deterministic phase
/// convention (first non-negligible component of each u column real positive,
/// v compensated so the product is unchanged).
struct SvdResult {
    ComplexMatrix u;
    Eigen::VectorXd singular_values;
    ComplexMatrix v;
};

/// Hermitian eigendecomposition m = vectors * diag(values) * vectors^*,
/// eigenvalues descending, eigenvector phases fixed as in SvdResult.
struct EighResult {
    Eigen::VectorXd values;
    ComplexMatrix vectors;
};

ComplexMatrix adjoint(const ComplexMatrix& m);

/// (m + m^*) / 2, safe to assign back to its own argument.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

SvdResult svd(const ComplexMatrix& m);

EighResult hermitian_eigs(const ComplexMatrix& m);

/// Spectral norm (largest singular value). Zero-sized matrices have norm 0.
double operator_norm(const ComplexMatrix& m);

/// Number of singular values above the rank cutoff.
Index numerical_rank(const Eigen::VectorXd& singular_values, Index rows, Index cols,
                     const Tolerance& tol = {});
Index numerical_rank(const ComplexMatrix& m, const Tolerance& tol = {});

/// Moore-Penrose pseudoinverse with the shared rank cutoff.
ComplexMatrix pseudoinverse(const ComplexMatrix& m, const Tolerance& tol = {});

/// Positive square root of a Hermitian PSD matrix. Eigenvalues in
/// (-psd_slack_rel * ||m||, 0) are clamped to zero; anything more negative
/// raises NotPositive. Raises NotHermitian when ||m - m^*|| exceeds
/// residual_rel * max(1, ||m||).
ComplexMatrix sqrt_psd(const ComplexMatrix& m, const Tolerance& tol = {});

/// Orthogonal projection onto the column space of m.
ComplexMatrix range_projection(const ComplexMatrix& m, const Tolerance& tol = {});

/// Loewner-order predicate p <= q for Hermitian p, q: true iff the smallest
/// eigenvalue of q - p is >= -psd_slack_rel * max(1, ||q - p||).
bool psd_order_holds(const ComplexMatrix& p, const ComplexMatrix& q, const Tolerance& tol = {});

}  // namespace opalg
