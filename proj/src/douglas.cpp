#include "opalg/douglas.hpp"

#include <cmath>

namespace opalg {

namespace {

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw DimensionMismatch(std::string(who) + ": operands must be square and equal-sized");
    }
}

bool passes_partial_isometry_test(const ComplexMatrix& c, const Tolerance& tol) {
    const double scale = std::max(1.0, operator_norm(c));
    return operator_norm(c * c.adjoint() * c - c) <= 10.0 * tol.residual_rel * scale;
}

// Shared core: candidate factor c = a * pinv(b). The factorization exists iff
// the residual a - c b = a (I - pinv(b) b) is negligible, which is exactly the
// inclusion of the numerical kernel of b in the numerical kernel of a.
struct FactorCandidate {
    ComplexMatrix factor;
    double residual;
    bool admissible;
};

FactorCandidate factor_candidate(const ComplexMatrix& a, const ComplexMatrix& b,
                                 const Tolerance& tol) {
    const ComplexMatrix b_pinv = pseudoinverse(b, tol);
    FactorCandidate out{a * b_pinv, 0.0, false};
    out.residual = operator_norm(a - out.factor * b);
    out.admissible = out.residual <= tol.residual_rel * std::max(1.0, operator_norm(a));
    return out;
}

}  // namespace

std::optional<double> majorization_lambda(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const Tolerance& tol) {
    require_same_square(a, b, "majorization_lambda");
    const FactorCandidate cand = factor_candidate(a, b, tol);
    if (!cand.admissible) return std::nullopt;
    return operator_norm(cand.factor);
}

std::optional<FactorizationResult> douglas_factor(const ComplexMatrix& a, const ComplexMatrix& b,
                                                  const Tolerance& tol) {
    require_same_square(a, b, "douglas_factor");
    const FactorCandidate cand = factor_candidate(a, b, tol);
    if (!cand.admissible) return std::nullopt;
    FactorizationResult out;
    out.factor = cand.factor;
    out.lambda_min = operator_norm(cand.factor);
    out.residual = cand.residual;
    out.is_partial_isometry = passes_partial_isometry_test(cand.factor, tol);
    return out;
}

FactorizationResult douglas_factor_isometric(const ComplexMatrix& a, const ComplexMatrix& b,
                                             const Tolerance& tol) {
    require_same_square(a, b, "douglas_factor_isometric");
    const ComplexMatrix gram_a = a.adjoint() * a;
    const ComplexMatrix gram_b = b.adjoint() * b;
    const double defect = operator_norm(gram_a - gram_b);
    if (defect > tol.residual_rel * std::max(1.0, operator_norm(gram_b))) {
        throw NotEqualGram("douglas_factor_isometric: a^*a and b^*b differ beyond tolerance");
    }
    const FactorCandidate cand = factor_candidate(a, b, tol);
    FactorizationResult out;
    out.factor = cand.factor;
    out.lambda_min = operator_norm(cand.factor);
    out.residual = cand.residual;
    out.is_partial_isometry = true;
    return out;
}

PolarDecomposition polar_decomposition(const ComplexMatrix& a, const Tolerance& tol) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("polar_decomposition: matrix must be square");
    }
    const ComplexMatrix positive = sqrt_psd(a.adjoint() * a, tol);
    const FactorizationResult fac = douglas_factor_isometric(a, positive, tol);
    return PolarDecomposition{fac.factor, positive};
}

}  // namespace opalg
