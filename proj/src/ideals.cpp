#include "opalg/ideals.hpp"

#include "opalg/douglas.hpp"

#include <cmath>
#include <utility>

namespace opalg {

namespace {

Eigen::VectorXcd vec(const ComplexMatrix& m) {
    return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

ComplexMatrix unvec(const Eigen::VectorXcd& v, Index d) {
    return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

ComplexMatrix stack_columns(const std::vector<ComplexMatrix>& ms) {
    if (ms.empty()) return ComplexMatrix::Zero(0, 0);
    ComplexMatrix out(ms.front().size(), static_cast<Index>(ms.size()));
    for (Index j = 0; j < out.cols(); ++j) out.col(j) = vec(ms[static_cast<size_t>(j)]);
    return out;
}

// Orthonormal basis of the column space, using the shared rank cutoff.
ComplexMatrix column_span(const ComplexMatrix& cols, const Tolerance& tol) {
    if (cols.cols() == 0 || cols.rows() == 0) return ComplexMatrix::Zero(cols.rows(), 0);
    const SvdResult s = svd(cols);
    const Index r = numerical_rank(s.singular_values, cols.rows(), cols.cols(), tol);
    return s.u.leftCols(r);
}

bool spans_member(const ComplexMatrix& basis, const Eigen::VectorXcd& v, const Tolerance& tol) {
    const double bound = tol.residual_rel * std::max(1.0, v.norm());
    if (basis.cols() == 0) return v.norm() <= bound;
    const Eigen::VectorXcd residual = v - basis * (basis.adjoint() * v);
    return residual.norm() <= bound;
}

// Basis of U n W from the nullspace of [U, -W]: a nullspace vector (x; y)
// satisfies U x = W y, and U x enumerates the intersection.
ComplexMatrix subspace_intersection(const ComplexMatrix& bu, const ComplexMatrix& bw,
                                    const Tolerance& tol) {
    if (bu.cols() == 0 || bw.cols() == 0) return ComplexMatrix::Zero(bu.rows(), 0);
    ComplexMatrix m(bu.rows(), bu.cols() + bw.cols());
    m << bu, -bw;
    const SvdResult s = svd(m);
    const Index r = numerical_rank(s.singular_values, m.rows(), m.cols(), tol);
    const Index nullity = m.cols() - r;
    if (nullity <= 0) return ComplexMatrix::Zero(bu.rows(), 0);
    const ComplexMatrix coeffs = s.v.rightCols(nullity).topRows(bu.cols());
    return column_span(bu * coeffs, tol);
}

Index subspace_sum_dim(const ComplexMatrix& bu, const ComplexMatrix& bw, const Tolerance& tol) {
    ComplexMatrix m(bu.rows(), bu.cols() + bw.cols());
    m << bu, bw;
    if (m.cols() == 0) return 0;
    const SvdResult s = svd(m);
    return numerical_rank(s.singular_values, m.rows(), m.cols(), tol);
}

bool subspaces_equal(const ComplexMatrix& bu, const ComplexMatrix& bw, const Tolerance& tol) {
    return bu.cols() == bw.cols() && subspace_sum_dim(bu, bw, tol) == bu.cols();
}

std::vector<ComplexMatrix> columns_as_matrices(const ComplexMatrix& basis, Index d) {
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<size_t>(basis.cols()));
    for (Index j = 0; j < basis.cols(); ++j) out.push_back(unvec(basis.col(j), d));
    return out;
}

ComplexMatrix right_multiplied_span(const std::vector<ComplexMatrix>& basis,
                                    const ComplexMatrix& a, const Tolerance& tol) {
    std::vector<ComplexMatrix> products;
    products.reserve(basis.size());
    for (const ComplexMatrix& b : basis) products.push_back(b * a);
    return column_span(stack_columns(products), tol);
}

void require_uniform_square(const std::vector<ComplexMatrix>& as, const char* who) {
    for (const ComplexMatrix& a : as) {
        if (a.rows() != a.cols() || a.rows() != as.front().rows()) {
            throw DimensionMismatch(std::string(who) + ": matrices must be square and equal-sized");
        }
    }
}

}  // namespace

bool ideal_contains(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
    return majorization_lambda(a, b, tol).has_value();
}

ComplexMatrix canonical_generator(const ComplexMatrix& a, const Tolerance& tol) {
    if (a.rows() != a.cols()) throw DimensionMismatch("canonical_generator: matrix must be square");
    return sqrt_psd(a.adjoint() * a, tol);
}

IdealDescriptor ideal_descriptor(const ComplexMatrix& a, StarAlgebraBasis ambient,
                                 const Tolerance& tol) {
    if (a.rows() != ambient.dim || a.cols() != ambient.dim) {
        throw DimensionMismatch("ideal_descriptor: element does not match the ambient size");
    }
    const ComplexMatrix span = column_span(stack_columns(ambient.basis), tol);
    if (!spans_member(span, vec(a), tol)) {
        throw InvalidArgument("ideal_descriptor: element is not in the ambient algebra");
    }
    return IdealDescriptor{canonical_generator(a, tol), std::move(ambient)};
}

ComplexMatrix finite_generator(const std::vector<ComplexMatrix>& as, const Tolerance& tol) {
    if (as.empty()) throw EmptyList("finite_generator: need at least one generator");
    require_uniform_square(as, "finite_generator");
    ComplexMatrix gram = ComplexMatrix::Zero(as.front().rows(), as.front().cols());
    for (const ComplexMatrix& a : as) gram += a.adjoint() * a;
    return sqrt_psd(gram, tol);
}

ComplexMatrix countable_generator_truncated(const std::vector<ComplexMatrix>& as, Index n,
                                            const Tolerance& tol) {
    if (as.empty()) throw EmptyList("countable_generator_truncated: need at least one generator");
    require_uniform_square(as, "countable_generator_truncated");
    if (n < 1 || n > static_cast<Index>(as.size())) {
        throw InvalidArgument("countable_generator_truncated: n must be in [1, len(as)]");
    }
    const Index d = as.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    double weight = 1.0;
    for (Index i = 0; i < n; ++i) {
        const ComplexMatrix& a = as[static_cast<size_t>(i)];
        const double norm = operator_norm(a);
        if (operator_norm(a - a.adjoint()) > tol.residual_rel * std::max(1.0, norm) ||
            !psd_order_holds(ComplexMatrix::Zero(d, d), a, tol) ||
            norm > 1.0 + tol.residual_rel) {
            throw NotContraction(
                "countable_generator_truncated: generators must be positive contractions");
        }
        const ComplexMatrix scaled = norm > 1.0 ? ComplexMatrix(a / norm) : a;
        weight /= 2.0;
        sum += weight * scaled * scaled;
    }
    return sqrt_psd(sum, tol);
}

StarAlgebraBasis generate_star_algebra(const std::vector<ComplexMatrix>& generators, Index dim,
                                       const Tolerance& tol) {
    for (const ComplexMatrix& g : generators) {
        if (g.rows() != dim || g.cols() != dim) {
            throw DimensionMismatch("generate_star_algebra: generators must be dim x dim");
        }
    }
    std::vector<ComplexMatrix> seed;
    seed.push_back(ComplexMatrix::Identity(dim, dim));
    seed.insert(seed.end(), generators.begin(), generators.end());
    ComplexMatrix basis = column_span(stack_columns(seed), tol);

    const Index max_rounds = dim * dim + 1;
    for (Index round = 0; round < max_rounds; ++round) {
        const std::vector<ComplexMatrix> mats = columns_as_matrices(basis, dim);
        std::vector<ComplexMatrix> candidates = mats;
        for (const ComplexMatrix& m : mats) candidates.push_back(m.adjoint());
        for (const ComplexMatrix& lhs : mats) {
            for (const ComplexMatrix& rhs : mats) candidates.push_back(lhs * rhs);
        }
        const ComplexMatrix grown = column_span(stack_columns(candidates), tol);
        if (grown.cols() == basis.cols()) break;
        basis = grown;
    }

    StarAlgebraBasis out;
    out.dim = dim;
    out.basis = columns_as_matrices(basis, dim);
    return out;
}

IdealIntersectionReport verify_ideal_intersection(const StarAlgebraBasis& r1,
                                                  const StarAlgebraBasis& r2,
                                                  const ComplexMatrix& a, const Tolerance& tol) {
    if (r1.dim != r2.dim || a.rows() != r1.dim || a.cols() != r1.dim) {
        throw DimensionMismatch("verify_ideal_intersection: dimensions must agree");
    }
    const ComplexMatrix span1 = column_span(stack_columns(r1.basis), tol);
    const ComplexMatrix span2 = column_span(stack_columns(r2.basis), tol);
    if (!spans_member(span1, vec(a), tol) || !spans_member(span2, vec(a), tol)) {
        throw NotInIntersection("verify_ideal_intersection: element is not in both algebras");
    }

    const ComplexMatrix r1a = right_multiplied_span(r1.basis, a, tol);
    const ComplexMatrix r2a = right_multiplied_span(r2.basis, a, tol);
    const ComplexMatrix common = subspace_intersection(span1, span2, tol);
    const ComplexMatrix common_a =
        right_multiplied_span(columns_as_matrices(common, r1.dim), a, tol);

    const ComplexMatrix space_1 = subspace_intersection(r1a, span2, tol);
    const ComplexMatrix space_2 = subspace_intersection(r1a, r2a, tol);

    IdealIntersectionReport report;
    report.dim_r1a_cap_r2 = space_1.cols();
    report.dim_r1a_cap_r2a = space_2.cols();
    report.dim_common_a = common_a.cols();
    report.equal_12 = subspaces_equal(space_1, space_2, tol);
    report.equal_13 = subspaces_equal(space_1, common_a, tol);
    report.equal_23 = subspaces_equal(space_2, common_a, tol);
    return report;
}

ZeroIsolation is_zero_isolated_matrix(const ComplexMatrix& a, const Tolerance& tol) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("is_zero_isolated_matrix: matrix must be square");
    }
    const SvdResult s = svd(a);
    const Index rank = numerical_rank(s.singular_values, a.rows(), a.cols(), tol);
    ZeroIsolation out;
    out.isolated = true;  // 0 is always isolated in a finite spectrum
    out.gap = rank > 0 ? s.singular_values(rank - 1) * s.singular_values(rank - 1) : 0.0;
    return out;
}

}  // namespace opalg
