#include "opalg/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace opalg {

namespace {

// Multiplies each column of u by a unimodular scalar so that its first
// non-negligible entry becomes real positive. v, when given, is multiplied by
// the same scalar so products of the form u * s * v^* are unchanged.
void fix_column_phases(ComplexMatrix& u, ComplexMatrix* v) {
    for (Index j = 0; j < u.cols(); ++j) {
        const double col_scale = u.col(j).cwiseAbs().maxCoeff();
        if (col_scale <= 0.0) continue;
        for (Index i = 0; i < u.rows(); ++i) {
            const Complex x = u(i, j);
            if (std::abs(x) > 1e-12 * col_scale) {
                const Complex phase = std::conj(x) / std::abs(x);
                u.col(j) *= phase;
                if (v != nullptr && j < v->cols()) v->col(j) *= phase;
                break;
            }
        }
    }
}

}  // namespace

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    const ComplexMatrix conj_t = m.adjoint();
    return (m + conj_t) / 2.0;
}

SvdResult svd(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
    fix_column_phases(out.u, &out.v);
    return out;
}

EighResult hermitian_eigs(const ComplexMatrix& m) {
    const ComplexMatrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    const Index n = m.rows();
    EighResult out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen returns ascending eigenvalues; flip to descending.
    for (Index j = 0; j < n; ++j) {
        out.values(j) = solver.eigenvalues()(n - 1 - j);
        out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    fix_column_phases(out.vectors, nullptr);
    return out;
}

double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> solver(m);
    return solver.singularValues().size() > 0 ? solver.singularValues()(0) : 0.0;
}

Index numerical_rank(const Eigen::VectorXd& singular_values, Index rows, Index cols,
                     const Tolerance& tol) {
    if (singular_values.size() == 0) return 0;
    const double cutoff =
        tol.rank_cutoff_rel * singular_values(0) * static_cast<double>(std::max(rows, cols));
    Index rank = 0;
    for (Index i = 0; i < singular_values.size(); ++i) {
        if (singular_values(i) > cutoff && singular_values(i) > 0.0) ++rank;
    }
    return rank;
}

Index numerical_rank(const ComplexMatrix& m, const Tolerance& tol) {
    Eigen::JacobiSVD<ComplexMatrix> solver(m);
    return numerical_rank(solver.singularValues(), m.rows(), m.cols(), tol);
}

ComplexMatrix pseudoinverse(const ComplexMatrix& m, const Tolerance& tol) {
    const SvdResult s = svd(m);
    const Index rank = numerical_rank(s.singular_values, m.rows(), m.cols(), tol);
    ComplexMatrix pinv = ComplexMatrix::Zero(m.cols(), m.rows());
    for (Index k = 0; k < rank; ++k) {
        pinv += (1.0 / s.singular_values(k)) * s.v.col(k) * s.u.col(k).adjoint();
    }
    return pinv;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, const Tolerance& tol) {
    if (m.rows() != m.cols()) throw DimensionMismatch("sqrt_psd: matrix must be square");
    const double herm_defect = operator_norm(m - m.adjoint());
    const double scale = operator_norm(m);
    if (herm_defect > tol.residual_rel * std::max(1.0, scale)) {
        throw NotHermitian("sqrt_psd: matrix is not Hermitian within tolerance");
    }
    EighResult e = hermitian_eigs(m);
    const double norm = e.values.size() > 0 ? e.values.cwiseAbs().maxCoeff() : 0.0;
    // Eigenvalues below the rank cutoff are treated as exact zeros; otherwise
    // kernel noise of size eps resurfaces as sqrt(eps) and inflates the rank
    // of the root.
    const double zero_cutoff = tol.rank_cutoff_rel * norm * static_cast<double>(m.rows());
    Eigen::VectorXd clamped = e.values;
    for (Index i = 0; i < clamped.size(); ++i) {
        if (clamped(i) < -tol.psd_slack_rel * norm) {
            throw NotPositive("sqrt_psd: matrix has a negative eigenvalue beyond tolerance");
        }
        clamped(i) = clamped(i) <= zero_cutoff ? 0.0 : std::sqrt(clamped(i));
    }
    const ComplexMatrix root = e.vectors * clamped.asDiagonal() * e.vectors.adjoint();
    // Symmetrize away the last bits of roundoff so callers can treat the
    // result as exactly Hermitian.
    return hermitian_part(root);
}

ComplexMatrix range_projection(const ComplexMatrix& m, const Tolerance& tol) {
    const SvdResult s = svd(m);
    const Index rank = numerical_rank(s.singular_values, m.rows(), m.cols(), tol);
    ComplexMatrix proj = ComplexMatrix::Zero(m.rows(), m.rows());
    if (rank > 0) {
        const ComplexMatrix ur = s.u.leftCols(rank);
        proj = hermitian_part(ur * ur.adjoint());
    }
    return proj;
}

bool psd_order_holds(const ComplexMatrix& p, const ComplexMatrix& q, const Tolerance& tol) {
    if (p.rows() != q.rows() || p.cols() != q.cols() || p.rows() != p.cols()) {
        throw DimensionMismatch("psd_order_holds: operands must be square and equal-sized");
    }
    const EighResult e = hermitian_eigs(q - p);
    if (e.values.size() == 0) return true;
    const double norm = e.values.cwiseAbs().maxCoeff();
    const double min_eig = e.values(e.values.size() - 1);
    return min_eig >= -tol.psd_slack_rel * std::max(1.0, norm);
}

}  // namespace opalg
