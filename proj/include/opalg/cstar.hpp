#pragma once

#include "opalg/linalg.hpp"
#include "opalg/types.hpp"

#include <cstdint>
#include <vector>

namespace opalg {

/// Vector in the Hilbert bimodule M_d^k over M_d: a tuple of k matrices of
/// size d x d, acted on componentwise from both sides.
struct BimoduleElement {
    Index dim = 0;
    Index arity = 0;
    std::vector<ComplexMatrix> parts;

    BimoduleElement() = default;
    explicit BimoduleElement(std::vector<ComplexMatrix> parts_in);
};

/// Coefficients T_1, ..., T_n of a C*-convex combination; valid when
/// sum T_i^* T_i = I within tolerance.
struct CoefficientTuple {
    Index dim = 0;
    std::vector<ComplexMatrix> coefficients;

    CoefficientTuple() = default;
    explicit CoefficientTuple(std::vector<ComplexMatrix> coefficients_in);

    [[nodiscard]] Index count() const { return static_cast<Index>(coefficients.size()); }
};

/// Raises NotPartitionOfUnity when sum T_i^* T_i deviates from I by more than
/// residual_rel.
void validate_coefficients(const CoefficientTuple& ts, const Tolerance& tol = {});

/// Reference to an operand of a segment step: either an input element or the
/// value of an earlier step.
struct OperandRef {
    enum class Kind { Input, Step };
    Kind kind = Kind::Input;
    Index index = 0;

    static OperandRef input(Index i) { return OperandRef{Kind::Input, i}; }
    static OperandRef step(Index i) { return OperandRef{Kind::Step, i}; }
};

/// One two-term C*-convex combination t1^* L t1 + t2^* R t2. Unitary
/// conjugations are encoded with t2 = 0 and t1 unitary.
struct SegmentStep {
    OperandRef left;
    OperandRef right;
    ComplexMatrix t1;
    ComplexMatrix t2;
};

/// Straight-line certificate that an n-term C*-convex combination is reachable
/// through two-term segment steps: replaying the steps inside any set that is
/// closed under segments stays inside the set.
struct SegmentProgram {
    std::vector<SegmentStep> steps;
    OperandRef output;
};

/// sum T_i^* A_i T_i, applied partwise.
BimoduleElement cstar_combination(const std::vector<BimoduleElement>& as,
                                  const CoefficientTuple& ts, const Tolerance& tol = {});

struct UnitaryPolar {
    ComplexMatrix unitary;
    ComplexMatrix positive;
};

/// T = U P with U genuinely unitary (the kernel completion is the SVD one)
/// and P = sqrt(T^* T). Exists for every square matrix.
UnitaryPolar unitary_polar(const ComplexMatrix& t);

/// From coefficients T_1..T_n (n >= 2) builds S_i = T_i Q^+ with
/// Q = sqrt(I - T_n^* T_n), so that T_i = S_i Q and sum S_i^* S_i is the range
/// projection of Q.
std::vector<ComplexMatrix> prep_coefficients(const CoefficientTuple& ts,
                                             const Tolerance& tol = {});

/// Compiles an n-term C*-convex combination into a SegmentProgram of two-term
/// steps whose replay reproduces the combination.
SegmentProgram reduce_to_segments(const std::vector<BimoduleElement>& as,
                                  const CoefficientTuple& ts, const Tolerance& tol = {});

/// Evaluates a SegmentProgram on concrete inputs. Raises BadReference for
/// forward or out-of-range references.
BimoduleElement replay_program(const std::vector<BimoduleElement>& as,
                               const SegmentProgram& prog);

/// Draws `count` members of the n-th matrix range of t: images Phi(t) under
/// unital completely positive maps built from Haar-random isometries split
/// into kraus_count blocks. Deterministic in the seed; each sample uses an
/// independent subseed, so results do not depend on evaluation order.
std::vector<ComplexMatrix> matrix_range_sample(const ComplexMatrix& t, Index n, Index kraus_count,
                                               Index count, std::uint64_t seed);

/// Certificate that the diagonal n x n blocks of a normal matrix in M_{m n}
/// are C*-convex combinations of its eigenvalue diagonals.
struct DiagonalBlocksReport {
    std::vector<ComplexMatrix> generators;  ///< m diagonal matrices of size n
    std::vector<std::vector<ComplexMatrix>> coefficients;  ///< per block column j: m blocks U_ij
    double max_isometry_residual = 0.0;  ///< max_j ||sum_i U_ij^* U_ij - I||
    double max_block_residual = 0.0;     ///< max_j ||A_jj - sum_i U_ij^* D_i U_ij||
};

DiagonalBlocksReport verify_diagonal_blocks(const ComplexMatrix& a, Index m, Index n,
                                            const Tolerance& tol = {});

/// Reproduces the rank obstruction that keeps C*-segments from being convex:
/// every element of the segment joining diag(1,0) and 0 in M_2 has rank <= 1,
/// the unitary swap reaches diag(0,1), yet the average of diag(1,0) and
/// diag(0,1) has rank 2.
struct SegmentRankReport {
    Index samples = 0;
    Index max_segment_rank = 0;
    bool swap_reaches_conjugate = false;
    ComplexMatrix swap_value;
    Index average_rank = 0;
};

SegmentRankReport segment_rank_demo(Index samples, std::uint64_t seed);

}  // namespace opalg
