#include "opalg/cstar.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

namespace opalg {

namespace {

void require_square_of(const ComplexMatrix& m, Index d, const char* who) {
    if (m.rows() != d || m.cols() != d) {
        throw DimensionMismatch(std::string(who) + ": expected a square matrix of the shared size");
    }
}

// Uniform in [0, 1) from the top 53 bits; avoids the implementation-defined
// behaviour of std::uniform_real_distribution so seeded runs are portable.
double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

Complex standard_gaussian(std::mt19937_64& eng) {
    const double u1 = 1.0 - uniform01(eng);
    const double u2 = uniform01(eng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return Complex(radius * std::cos(angle), radius * std::sin(angle));
}

// Haar-distributed isometry from C^cols to C^rows: QR of a complex Gaussian
// with the R-diagonal phase fix.
ComplexMatrix haar_isometry(Index rows, Index cols, std::mt19937_64& eng) {
    ComplexMatrix g(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) g(i, j) = standard_gaussian(eng);
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
    const ComplexMatrix& packed = qr.matrixQR();
    for (Index j = 0; j < cols; ++j) {
        const Complex diag = packed(j, j);
        if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
    }
    return q;
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

BimoduleElement::BimoduleElement(std::vector<ComplexMatrix> parts_in) : parts(std::move(parts_in)) {
    if (parts.empty()) throw InvalidArgument("BimoduleElement: arity must be positive");
    dim = parts.front().rows();
    arity = static_cast<Index>(parts.size());
    for (const ComplexMatrix& p : parts) require_square_of(p, dim, "BimoduleElement");
}

CoefficientTuple::CoefficientTuple(std::vector<ComplexMatrix> coefficients_in)
    : coefficients(std::move(coefficients_in)) {
    if (coefficients.empty()) throw InvalidArgument("CoefficientTuple: need at least one operator");
    dim = coefficients.front().rows();
    for (const ComplexMatrix& t : coefficients) require_square_of(t, dim, "CoefficientTuple");
}

void validate_coefficients(const CoefficientTuple& ts, const Tolerance& tol) {
    ComplexMatrix gram = ComplexMatrix::Zero(ts.dim, ts.dim);
    for (const ComplexMatrix& t : ts.coefficients) gram += t.adjoint() * t;
    const double defect = operator_norm(gram - ComplexMatrix::Identity(ts.dim, ts.dim));
    if (defect > tol.residual_rel) {
        throw NotPartitionOfUnity("coefficients do not satisfy sum T_i^* T_i = I");
    }
}

BimoduleElement cstar_combination(const std::vector<BimoduleElement>& as,
                                  const CoefficientTuple& ts, const Tolerance& tol) {
    if (static_cast<Index>(as.size()) != ts.count()) {
        throw DimensionMismatch("cstar_combination: element and coefficient counts differ");
    }
    if (as.empty()) throw InvalidArgument("cstar_combination: need at least one element");
    const Index d = ts.dim;
    const Index arity = as.front().arity;
    for (const BimoduleElement& a : as) {
        if (a.dim != d || a.arity != arity) {
            throw DimensionMismatch("cstar_combination: elements must share dim and arity");
        }
    }
    validate_coefficients(ts, tol);
    std::vector<ComplexMatrix> parts(static_cast<size_t>(arity), ComplexMatrix::Zero(d, d));
    for (size_t i = 0; i < as.size(); ++i) {
        const ComplexMatrix& t = ts.coefficients[i];
        for (size_t p = 0; p < parts.size(); ++p) parts[p] += t.adjoint() * as[i].parts[p] * t;
    }
    return BimoduleElement(std::move(parts));
}

UnitaryPolar unitary_polar(const ComplexMatrix& t) {
    if (t.rows() != t.cols()) throw DimensionMismatch("unitary_polar: matrix must be square");
    const SvdResult s = svd(t);
    UnitaryPolar out;
    out.unitary = s.u * s.v.adjoint();
    out.positive = hermitian_part(s.v * s.singular_values.asDiagonal() * s.v.adjoint());
    return out;
}

std::vector<ComplexMatrix> prep_coefficients(const CoefficientTuple& ts, const Tolerance& tol) {
    if (ts.count() < 2) throw InvalidArgument("prep_coefficients: need at least two coefficients");
    validate_coefficients(ts, tol);
    const Index d = ts.dim;
    const ComplexMatrix& tn = ts.coefficients.back();
    const ComplexMatrix q =
        sqrt_psd(ComplexMatrix::Identity(d, d) - tn.adjoint() * tn, tol);
    const ComplexMatrix q_pinv = pseudoinverse(q, tol);
    std::vector<ComplexMatrix> out;
    out.reserve(ts.coefficients.size() - 1);
    for (size_t i = 0; i + 1 < ts.coefficients.size(); ++i) {
        out.push_back(ts.coefficients[i] * q_pinv);
    }
    return out;
}

namespace {

OperandRef emit_step(SegmentProgram& prog, SegmentStep step) {
    prog.steps.push_back(std::move(step));
    return OperandRef::step(static_cast<Index>(prog.steps.size()) - 1);
}

// Recursive kernel of the segment reduction. The operands are references to
// already-available values; only the coefficients drive the construction.
OperandRef reduce_impl(const std::vector<OperandRef>& ops,
                       const std::vector<ComplexMatrix>& coeffs, SegmentProgram& prog, Index d,
                       const Tolerance& tol) {
    const size_t n = ops.size();
    const ComplexMatrix zero = ComplexMatrix::Zero(d, d);
    if (n == 1) {
        // sum T^*T = I with a single term forces T unitary.
        return emit_step(prog, SegmentStep{ops[0], ops[0], coeffs[0], zero});
    }
    if (n == 2) {
        return emit_step(prog, SegmentStep{ops[0], ops[1], coeffs[0], coeffs[1]});
    }

    // Split off unitary phases so the remaining coefficients are positive.
    std::vector<OperandRef> rotated(n);
    std::vector<ComplexMatrix> positives(n);
    for (size_t i = 0; i < n; ++i) {
        UnitaryPolar up = unitary_polar(coeffs[i]);
        positives[i] = std::move(up.positive);
        rotated[i] = emit_step(prog, SegmentStep{ops[i], ops[i], up.unitary, zero});
    }

    const ComplexMatrix& pn = positives[n - 1];
    const ComplexMatrix q = sqrt_psd(ComplexMatrix::Identity(d, d) - pn * pn, tol);
    const ComplexMatrix q_pinv = pseudoinverse(q, tol);
    const ComplexMatrix range = hermitian_part(q * q_pinv);
    const ComplexMatrix kernel_proj = ComplexMatrix::Identity(d, d) - range;
    const double correction = 1.0 / std::sqrt(static_cast<double>(n - 1));

    std::vector<OperandRef> head_ops(rotated.begin(), rotated.end() - 1);
    std::vector<ComplexMatrix> head_coeffs(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        head_coeffs[i] = positives[i] * q_pinv + correction * kernel_proj;
    }
    const OperandRef head = reduce_impl(head_ops, head_coeffs, prog, d, tol);
    return emit_step(prog, SegmentStep{head, rotated[n - 1], q, pn});
}

}  // namespace

SegmentProgram reduce_to_segments(const std::vector<BimoduleElement>& as,
                                  const CoefficientTuple& ts, const Tolerance& tol) {
    if (static_cast<Index>(as.size()) != ts.count()) {
        throw DimensionMismatch("reduce_to_segments: element and coefficient counts differ");
    }
    if (as.empty()) throw InvalidArgument("reduce_to_segments: need at least one element");
    const Index arity = as.front().arity;
    for (const BimoduleElement& a : as) {
        if (a.dim != ts.dim || a.arity != arity) {
            throw DimensionMismatch("reduce_to_segments: elements must share dim and arity");
        }
    }
    validate_coefficients(ts, tol);

    SegmentProgram prog;
    std::vector<OperandRef> inputs;
    inputs.reserve(as.size());
    for (Index i = 0; i < static_cast<Index>(as.size()); ++i) {
        inputs.push_back(OperandRef::input(i));
    }
    prog.output = reduce_impl(inputs, ts.coefficients, prog, ts.dim, tol);
    return prog;
}

namespace {

const BimoduleElement& resolve(const OperandRef& ref, const std::vector<BimoduleElement>& inputs,
                               const std::vector<BimoduleElement>& values, Index step_index) {
    if (ref.kind == OperandRef::Kind::Input) {
        if (ref.index < 0 || ref.index >= static_cast<Index>(inputs.size())) {
            throw BadReference("replay_program: input reference out of range");
        }
        return inputs[static_cast<size_t>(ref.index)];
    }
    if (ref.index < 0 || ref.index >= step_index) {
        throw BadReference("replay_program: step reference must point backwards");
    }
    return values[static_cast<size_t>(ref.index)];
}

}  // namespace

BimoduleElement replay_program(const std::vector<BimoduleElement>& as, const SegmentProgram& prog) {
    if (as.empty()) throw InvalidArgument("replay_program: need at least one input");
    const Index d = as.front().dim;
    const Index arity = as.front().arity;
    for (const BimoduleElement& a : as) {
        if (a.dim != d || a.arity != arity) {
            throw DimensionMismatch("replay_program: inputs must share dim and arity");
        }
    }
    std::vector<BimoduleElement> values;
    values.reserve(prog.steps.size());
    for (size_t k = 0; k < prog.steps.size(); ++k) {
        const SegmentStep& step = prog.steps[k];
        require_square_of(step.t1, d, "replay_program");
        require_square_of(step.t2, d, "replay_program");
        const BimoduleElement& lhs = resolve(step.left, as, values, static_cast<Index>(k));
        const BimoduleElement& rhs = resolve(step.right, as, values, static_cast<Index>(k));
        std::vector<ComplexMatrix> parts(static_cast<size_t>(arity));
        for (size_t p = 0; p < parts.size(); ++p) {
            parts[p] = step.t1.adjoint() * lhs.parts[p] * step.t1 +
                       step.t2.adjoint() * rhs.parts[p] * step.t2;
        }
        values.emplace_back(std::move(parts));
    }
    return resolve(prog.output, as, values, static_cast<Index>(prog.steps.size()));
}

std::vector<ComplexMatrix> matrix_range_sample(const ComplexMatrix& t, Index n, Index kraus_count,
                                               Index count, std::uint64_t seed) {
    if (t.rows() != t.cols()) throw DimensionMismatch("matrix_range_sample: t must be square");
    if (n < 1 || kraus_count < 1 || count < 0) {
        throw InvalidArgument("matrix_range_sample: n, kraus_count must be positive");
    }
    const Index d = t.rows();
    if (d * kraus_count < n) {
        throw InvalidDimension("matrix_range_sample: no isometry from C^n into C^(d*kraus_count)");
    }
    std::vector<ComplexMatrix> samples;
    samples.reserve(static_cast<size_t>(count));
    for (Index s = 0; s < count; ++s) {
        std::mt19937_64 eng = seeded_engine(seed, static_cast<std::uint64_t>(s));
        const ComplexMatrix k = haar_isometry(d * kraus_count, n, eng);
        ComplexMatrix value = ComplexMatrix::Zero(n, n);
        for (Index j = 0; j < kraus_count; ++j) {
            const ComplexMatrix block = k.block(j * d, 0, d, n);
            value += block.adjoint() * t * block;
        }
        samples.push_back(std::move(value));
    }
    return samples;
}

DiagonalBlocksReport verify_diagonal_blocks(const ComplexMatrix& a, Index m, Index n,
                                            const Tolerance& tol) {
    if (m < 1 || n < 1 || a.rows() != a.cols() || a.rows() != m * n) {
        throw DimensionMismatch("verify_diagonal_blocks: matrix must be (m*n) x (m*n)");
    }
    const double scale = operator_norm(a);
    const double normality = operator_norm(a * a.adjoint() - a.adjoint() * a);
    if (normality > tol.residual_rel * std::max(1.0, scale * scale)) {
        throw NotNormal("verify_diagonal_blocks: matrix is not normal within tolerance");
    }

    Eigen::ComplexSchur<ComplexMatrix> schur(a);
    // a = z tri z^*; for normal a the triangular factor is diagonal, so with
    // u = z^* we have a = u^* diag u.
    const ComplexMatrix u = schur.matrixU().adjoint();
    const Eigen::VectorXcd eigenvalues = schur.matrixT().diagonal();

    DiagonalBlocksReport report;
    report.generators.reserve(static_cast<size_t>(m));
    for (Index i = 0; i < m; ++i) {
        report.generators.push_back(
            ComplexMatrix(eigenvalues.segment(i * n, n).asDiagonal()));
    }
    report.coefficients.resize(static_cast<size_t>(m));
    for (Index j = 0; j < m; ++j) {
        ComplexMatrix iso = ComplexMatrix::Zero(n, n);
        ComplexMatrix recon = ComplexMatrix::Zero(n, n);
        std::vector<ComplexMatrix> column;
        column.reserve(static_cast<size_t>(m));
        for (Index i = 0; i < m; ++i) {
            const ComplexMatrix block = u.block(i * n, j * n, n, n);
            iso += block.adjoint() * block;
            recon += block.adjoint() * report.generators[static_cast<size_t>(i)] * block;
            column.push_back(block);
        }
        report.coefficients[static_cast<size_t>(j)] = std::move(column);
        report.max_isometry_residual =
            std::max(report.max_isometry_residual,
                     operator_norm(iso - ComplexMatrix::Identity(n, n)));
        report.max_block_residual =
            std::max(report.max_block_residual,
                     operator_norm(a.block(j * n, j * n, n, n) - recon));
    }
    return report;
}

SegmentRankReport segment_rank_demo(Index samples, std::uint64_t seed) {
    if (samples < 0) throw InvalidArgument("segment_rank_demo: sample count must be nonnegative");
    ComplexMatrix a(2, 2);
    a << 1, 0, 0, 0;
    ComplexMatrix conjugate(2, 2);
    conjugate << 0, 0, 0, 1;

    SegmentRankReport report;
    report.samples = samples;
    const Tolerance tol;
    for (Index s = 0; s < samples; ++s) {
        std::mt19937_64 eng = seeded_engine(seed, static_cast<std::uint64_t>(s));
        // Stacked 4x2 Haar isometry = a random coefficient pair (T1, T2) with
        // T1^*T1 + T2^*T2 = I; the second block multiplies the zero element.
        const ComplexMatrix k = haar_isometry(4, 2, eng);
        const ComplexMatrix t1 = k.topRows(2);
        const ComplexMatrix value = t1.adjoint() * a * t1;
        report.max_segment_rank = std::max(report.max_segment_rank, numerical_rank(value, tol));
    }

    ComplexMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    report.swap_value = swap.adjoint() * a * swap;
    report.swap_reaches_conjugate = operator_norm(report.swap_value - conjugate) <= 1e-12;
    report.average_rank = numerical_rank(ComplexMatrix((a + conjugate) / 2.0), tol);
    return report;
}

}  // namespace opalg
