#pragma once

#include "opalg/ideals.hpp"
#include "opalg/types.hpp"

#include <optional>
#include <vector>

namespace opalg {

/// Default oscillation bound for tail-convergence checks.
inline constexpr double kDefaultTailTol = 1e-6;

/// Default spectral-gap threshold for the sequence closedness test.
inline constexpr double kDefaultGapTol = 1e-3;

/// Truncated model of a function on the convergent-sequence space
/// {0} u {1/n : n in N}: samples f(1/1), ..., f(1/N) plus an optional value at
/// 0. An absent limit means "unspecified / not asserted continuous at 0".
/// tail_window is the suffix length used by convergence heuristics.
struct SequenceFunction {
    std::vector<Complex> samples;
    std::optional<Complex> limit;
    Index tail_window = 1;

    SequenceFunction() = default;
    /// Validates finiteness and the tail-window bounds; when
    /// assert_continuity is set, additionally checks that every sample in the
    /// tail window is within tail_tol of the declared limit.
    SequenceFunction(std::vector<Complex> samples_in, std::optional<Complex> limit_in,
                     Index tail_window_in = 0, bool assert_continuity = false,
                     double tail_tol = kDefaultTailTol);

    [[nodiscard]] Index depth() const { return static_cast<Index>(samples.size()); }
};

/// Verdict of a tail-convergence check. oscillation is the maximum pairwise
/// distance among the forced values in the tail window (including the forced
/// value at 0 when one exists); extendable means it is within tolerance, and
/// witness_limit is the value chosen at 0 for the extension.
struct ExtensionVerdict {
    bool extendable = false;
    std::optional<Complex> witness_limit;
    double oscillation = 0.0;
};

/// A factorization attempt: the factor is present iff the verdict is
/// extendable.
struct SequenceFactorization {
    ExtensionVerdict verdict;
    std::optional<SequenceFunction> factor;
};

/// Weak polar decomposition f = v * |f|: v is forced to f/|f| on the cozero
/// set of f and chosen freely elsewhere. Succeeds iff the forced tail values
/// converge within tail_tol.
SequenceFactorization wpdp_factor(const SequenceFunction& f, double tail_tol = kDefaultTailTol);

/// Factorization f = h * g under the pointwise majorization |f| <= |g|
/// (raises MajorizationFails otherwise). h is forced to f/g on the cozero set
/// of g; succeeds iff the forced tail converges.
SequenceFactorization dfp_factor(const SequenceFunction& f, const SequenceFunction& g,
                                 double tail_tol = kDefaultTailTol);

/// Builds the factor h with f = h * g out of weak polar decompositions alone:
/// with s = |f| + i sqrt(|g|^2 - |f|^2), polar parts v, v_f, v_g of s, f, g
/// give h = v_f * Re(v) * conj(v_g). Absent when any polar part fails to
/// extend. Both inputs must carry limits.
SequenceFactorization wpdp_to_dfp(const SequenceFunction& f, const SequenceFunction& g,
                                  double tail_tol = kDefaultTailTol);

/// For a pointwise partition of unity t1 + t2 + t3 = 1 with values in [0, 1],
/// computes s with t2 = s * (1 - t1) on the cozero set of 1 - t1, extended
/// across its zero set (constant 1/2 when everything is free). The returned s
/// makes t1 f1 + t2 f2 + t3 f3 = t1 f1 + (1-t1)(s f2 + (1-s) f3) hold
/// pointwise for arbitrary f1, f2, f3.
SequenceFactorization substonean_reduce(const SequenceFunction& t1, const SequenceFunction& t2,
                                        const SequenceFunction& t3,
                                        double tail_tol = kDefaultTailTol);

/// Sequence analogue of the spectral-gap test: the multiplication operator by
/// g has spectrum {|g(1/n)|^2} u {|g(0)|^2}; 0 fails to be isolated exactly
/// when nonzero values accumulate at 0, i.e. the nonzero tail dips below
/// gap_tol. gap is the smallest nonzero spectral value overall.
ZeroIsolation is_zero_isolated_sequence(const SequenceFunction& g,
                                        double gap_tol = kDefaultGapTol);

}  // namespace opalg
