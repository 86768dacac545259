#pragma once

#include "opalg/linalg.hpp"
#include "opalg/types.hpp"

#include <optional>

namespace opalg {

/// Outcome of factoring a = factor * b.
///
/// lambda_min is the smallest lambda >= 0 with a^*a <= lambda^2 b^*b, residual
/// is ||a - factor * b||, and is_partial_isometry records whether the factor
/// satisfies V V^*V = V within tolerance.
struct FactorizationResult {
    ComplexMatrix factor;
    double lambda_min = 0.0;
    double residual = 0.0;
    bool is_partial_isometry = false;
};

/// Smallest lambda >= 0 with a^*a <= lambda^2 b^*b, or nullopt when no such
/// lambda exists (equivalently, when the numerical kernel of b is not
/// contained in the numerical kernel of a). When present the value equals
/// ||a * pinv(b)||.
std::optional<double> majorization_lambda(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const Tolerance& tol = {});

/// Factor a = c * b whenever the majorization above holds. The factor agrees
/// with bf -> af on the range of b and vanishes on its orthogonal complement,
/// so ||c|| = lambda_min.
std::optional<FactorizationResult> douglas_factor(const ComplexMatrix& a, const ComplexMatrix& b,
                                                  const Tolerance& tol = {});

/// Factor a = c * b under the stronger hypothesis a^*a = b^*b (within
/// tolerance; raises NotEqualGram otherwise). The factor is a partial isometry
/// with c^*c the range projection of b and c c^* the range projection of a.
FactorizationResult douglas_factor_isometric(const ComplexMatrix& a, const ComplexMatrix& b,
                                             const Tolerance& tol = {});

struct PolarDecomposition {
    ComplexMatrix partial_isometry;  ///< V with V^*V = range projection of the positive part
    ComplexMatrix positive_part;     ///< sqrt(a^*a)
};

/// a = V * sqrt(a^*a) with V a partial isometry supported on the range of the
/// positive part.
PolarDecomposition polar_decomposition(const ComplexMatrix& a, const Tolerance& tol = {});

}  // namespace opalg
