#pragma once

#include "opalg/linalg.hpp"
#include "opalg/types.hpp"

#include <vector>

namespace opalg {

/// Linear basis of a unital *-subalgebra of the d x d matrices.
struct StarAlgebraBasis {
    Index dim = 0;                     ///< ambient matrix size d
    std::vector<ComplexMatrix> basis;  ///< linearly independent spanning set

    [[nodiscard]] Index size() const { return static_cast<Index>(basis.size()); }
};

/// A principal left ideal, carried by its positive canonical generator.
struct IdealDescriptor {
    ComplexMatrix generator;  ///< Hermitian PSD generator sqrt(sum a_i^* a_i)
    StarAlgebraBasis ambient;
};

/// Descriptor of the left ideal generated by a inside the ambient algebra;
/// the stored generator is the canonical positive one. Requires a to lie in
/// the span of the ambient basis.
IdealDescriptor ideal_descriptor(const ComplexMatrix& a, StarAlgebraBasis ambient,
                                 const Tolerance& tol = {});

/// True iff the left ideal generated by a is contained in the one generated by
/// b, decided through the majorization criterion a^*a <= lambda^2 b^*b.
bool ideal_contains(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});

/// sqrt(a^*a): the positive generator of the same left ideal as a.
ComplexMatrix canonical_generator(const ComplexMatrix& a, const Tolerance& tol = {});

/// sqrt(sum_i a_i^* a_i): single positive generator of the left ideal
/// generated by the whole list.
ComplexMatrix finite_generator(const std::vector<ComplexMatrix>& as, const Tolerance& tol = {});

/// Truncated countable-generation construction: sqrt(sum_{i<=n} a_i^2 / 2^i)
/// for positive contractions a_i. The squares of the returned operators form a
/// Loewner-nondecreasing sequence in n.
ComplexMatrix countable_generator_truncated(const std::vector<ComplexMatrix>& as, Index n,
                                            const Tolerance& tol = {});

/// Smallest unital *-subalgebra of the d x d matrices containing the given
/// generators, as an orthonormal (Frobenius) basis.
StarAlgebraBasis generate_star_algebra(const std::vector<ComplexMatrix>& generators, Index dim,
                                       const Tolerance& tol = {});

/// Dimensions and pairwise equality of the three subspaces R1*A n R2,
/// R1*A n R2*A and (R1 n R2)*A of the d x d matrices.
struct IdealIntersectionReport {
    Index dim_r1a_cap_r2 = 0;
    Index dim_r1a_cap_r2a = 0;
    Index dim_common_a = 0;
    bool equal_12 = false;
    bool equal_13 = false;
    bool equal_23 = false;
    [[nodiscard]] bool all_equal() const { return equal_12 && equal_13 && equal_23; }
};

/// Computes the three subspaces above for an element a of both algebras and
/// reports whether they coincide. Raises NotInIntersection when a does not lie
/// in span(r1) n span(r2) within tolerance.
IdealIntersectionReport verify_ideal_intersection(const StarAlgebraBasis& r1,
                                                  const StarAlgebraBasis& r2,
                                                  const ComplexMatrix& a,
                                                  const Tolerance& tol = {});

struct ZeroIsolation {
    bool isolated = false;
    double gap = 0.0;  ///< smallest nonzero spectral value (0 when none exists)
};

/// Whether 0 is isolated in the spectrum of a^*a. Always true for matrices;
/// the gap exhibits the constants mu^2 = gap, lambda^2 = ||a||^2 sandwiching
/// a^*a between multiples of its support projection.
ZeroIsolation is_zero_isolated_matrix(const ComplexMatrix& a, const Tolerance& tol = {});

}  // namespace opalg
