#include "opalg/sequences.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace opalg;

namespace {

SequenceFunction harmonic(Index depth) {
    std::vector<Complex> samples(static_cast<size_t>(depth));
    for (Index n = 1; n <= depth; ++n) {
        samples[static_cast<size_t>(n - 1)] = 1.0 / static_cast<double>(n);
    }
    return SequenceFunction(std::move(samples), Complex(0.0, 0.0));
}

// The split function of the counterexample: x on even sample points, 0 on odd.
SequenceFunction even_teeth(Index depth) {
    std::vector<Complex> samples(static_cast<size_t>(depth));
    for (Index n = 1; n <= depth; ++n) {
        samples[static_cast<size_t>(n - 1)] =
            n % 2 == 0 ? Complex(1.0 / static_cast<double>(n), 0.0) : Complex(0.0, 0.0);
    }
    return SequenceFunction(std::move(samples), Complex(0.0, 0.0));
}

SequenceFunction constant(Index depth, const Complex& value, const Complex& limit) {
    return SequenceFunction(std::vector<Complex>(static_cast<size_t>(depth), value), limit);
}

}  // namespace

TEST_CASE("sequence construction validates its invariants") {
    CHECK_THROWS_AS(SequenceFunction({}, std::nullopt), InvalidArgument);
    CHECK_THROWS_AS(SequenceFunction({Complex(1.0, 0.0)}, std::nullopt, 5), InvalidArgument);
    CHECK_THROWS_AS(
        SequenceFunction({Complex(std::numeric_limits<double>::infinity(), 0.0)}, std::nullopt),
        InvalidArgument);
    // Continuity assertion conflicts with a tail far from the declared limit.
    CHECK_THROWS_AS(SequenceFunction({Complex(1.0, 0.0), Complex(1.0, 0.0)}, Complex(0.0, 0.0), 0,
                                     true, 1e-6),
                    InvalidArgument);
    const SequenceFunction ok({Complex(1.0, 0.0), Complex(1.0, 0.0)}, Complex(1.0, 0.0), 0, true);
    CHECK(ok.tail_window == 1);
    CHECK(harmonic(64).tail_window == 16);
}

TEST_CASE("weak polar decomposition of sequences") {
    const SequenceFactorization positive = wpdp_factor(harmonic(64));
    REQUIRE(positive.factor.has_value());
    for (const Complex& v : positive.factor->samples) CHECK(v == Complex(1.0, 0.0));
    CHECK(*positive.verdict.witness_limit == Complex(1.0, 0.0));

    const SequenceFactorization zero = wpdp_factor(constant(16, 0.0, 0.0));
    REQUIRE(zero.factor.has_value());
    for (const Complex& v : zero.factor->samples) CHECK(v == Complex(0.0, 0.0));
    CHECK(*zero.factor->limit == Complex(0.0, 0.0));

    std::vector<Complex> alternating(64);
    for (Index n = 1; n <= 64; ++n) {
        alternating[static_cast<size_t>(n - 1)] =
            Complex((n % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(n), 0.0);
    }
    const SequenceFactorization sign_split =
        wpdp_factor(SequenceFunction(std::move(alternating), Complex(0.0, 0.0)));
    CHECK_FALSE(sign_split.factor.has_value());
    CHECK(sign_split.verdict.oscillation == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(wpdp_factor(SequenceFunction({Complex(1.0, 0.0)}, std::nullopt)),
                    InvalidArgument);
}

TEST_CASE("polar factors have unimodular forced values") {
    oracle::Rng rng(41);
    std::vector<Complex> samples(32);
    for (size_t i = 0; i < samples.size(); ++i) {
        samples[i] = i % 3 == 0 ? Complex(0.0, 0.0) : rng.complex_gaussian();
    }
    SequenceFunction f(samples, Complex(0.0, 0.0));
    const SequenceFactorization outcome = wpdp_factor(f, 3.0);  // generous tolerance: force output
    REQUIRE(outcome.factor.has_value());
    for (size_t i = 0; i < samples.size(); ++i) {
        if (std::abs(samples[i]) != 0.0) {
            CHECK(std::abs(std::abs(outcome.factor->samples[i]) - 1.0) <= 1e-15);
            CHECK(std::abs(samples[i] - outcome.factor->samples[i] * std::abs(samples[i])) <=
                  1e-15 * std::abs(samples[i]));
        }
    }
}

TEST_CASE("the split factorization cannot be continuous") {
    const SequenceFactorization outcome = dfp_factor(even_teeth(64), harmonic(64));
    CHECK_FALSE(outcome.factor.has_value());
    CHECK_FALSE(outcome.verdict.extendable);
    CHECK(outcome.verdict.oscillation == 1.0);
}

TEST_CASE("pointwise quotients that do converge") {
    const SequenceFunction g = harmonic(64);
    const SequenceFactorization same = dfp_factor(g, g);
    REQUIRE(same.factor.has_value());
    for (const Complex& v : same.factor->samples) CHECK(v == Complex(1.0, 0.0));
    CHECK(*same.verdict.witness_limit == Complex(1.0, 0.0));

    // f = g^2 converges slowly, so judge it with a matching tail tolerance;
    // the witness comes out exact because the quotient is affine in x.
    std::vector<Complex> squares(64);
    for (size_t i = 0; i < squares.size(); ++i) squares[i] = g.samples[i] * g.samples[i];
    const SequenceFunction f(std::move(squares), Complex(0.0, 0.0));
    const SequenceFactorization monotone = dfp_factor(f, g, 1e-2);
    REQUIRE(monotone.factor.has_value());
    for (size_t i = 0; i < 64; ++i) {
        CHECK(std::abs(monotone.factor->samples[i] - g.samples[i]) <= 1e-14);
    }
    CHECK(std::abs(*monotone.verdict.witness_limit) <= 1e-9);

    CHECK_THROWS_AS(dfp_factor(constant(16, 2.0, 2.0), constant(16, 1.0, 1.0)),
                    MajorizationFails);

    // Whenever a factor is returned, it reproduces f pointwise, including on
    // the zero set of the divisor where its values are free.
    const SequenceFunction teeth = even_teeth(64);
    const SequenceFactorization shared_zeros = dfp_factor(teeth, teeth);
    REQUIRE(shared_zeros.factor.has_value());
    for (size_t i = 0; i < teeth.samples.size(); ++i) {
        CHECK(std::abs(teeth.samples[i] -
                       shared_zeros.factor->samples[i] * teeth.samples[i]) <= 1e-15);
    }
}

TEST_CASE("building the quotient out of weak polar decompositions") {
    const SequenceFunction g = harmonic(64);
    const SequenceFactorization same = wpdp_to_dfp(g, g);
    REQUIRE(same.factor.has_value());
    for (const Complex& v : same.factor->samples) {
        CHECK(std::abs(v - Complex(1.0, 0.0)) <= 1e-12);
    }

    const SequenceFactorization zero = wpdp_to_dfp(constant(64, 0.0, 0.0), g);
    REQUIRE(zero.factor.has_value());
    for (const Complex& v : zero.factor->samples) CHECK(std::abs(v) <= 1e-15);

    std::vector<Complex> halves(64);
    for (Index n = 1; n <= 64; ++n) {
        halves[static_cast<size_t>(n - 1)] = Complex(0.5 / static_cast<double>(n), 0.0);
    }
    const SequenceFunction f(std::move(halves), Complex(0.0, 0.0));
    const SequenceFactorization outcome = wpdp_to_dfp(f, g);
    REQUIRE(outcome.factor.has_value());
    const SequenceFactorization direct = dfp_factor(f, g);
    REQUIRE(direct.factor.has_value());
    for (size_t i = 0; i < 64; ++i) {
        CHECK(std::abs(outcome.factor->samples[i] - Complex(0.5, 0.0)) <= 1e-12);
        CHECK(std::abs(outcome.factor->samples[i] - direct.factor->samples[i]) <= 1e-12);
        CHECK(std::abs(f.samples[i] - outcome.factor->samples[i] * g.samples[i]) <= 1e-15);
    }
}

TEST_CASE("coherence of the two factorization routes on random convergent data") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const Index depth = 48;
        std::vector<Complex> gs(static_cast<size_t>(depth));
        std::vector<Complex> fs(static_cast<size_t>(depth));
        // g converges geometrically to a random nonzero value; f = h0 g for a
        // convergent h0 with |h0| <= 1.
        const Complex g_lim = rng.complex_gaussian() + Complex(3.0, 0.0);
        const Complex h_lim = 0.5 * std::exp(Complex(0.0, rng.uniform(0.0, 6.28)));
        for (Index n = 1; n <= depth; ++n) {
            const double decay = std::pow(0.5, static_cast<double>(n));
            const Complex gv = g_lim + decay * rng.complex_gaussian();
            const Complex hv = h_lim + decay * 0.1 * rng.complex_gaussian();
            gs[static_cast<size_t>(n - 1)] = gv;
            fs[static_cast<size_t>(n - 1)] = hv * gv;
        }
        const SequenceFunction g(gs, g_lim);
        const SequenceFunction f(fs, h_lim * g_lim);

        const SequenceFactorization direct = dfp_factor(f, g, 1e-4);
        const SequenceFactorization via_polar = wpdp_to_dfp(f, g, 1e-4);
        REQUIRE(direct.factor.has_value());
        REQUIRE(via_polar.factor.has_value());
        for (Index i = 0; i < depth; ++i) {
            CHECK(std::abs(direct.factor->samples[static_cast<size_t>(i)] -
                           via_polar.factor->samples[static_cast<size_t>(i)]) <= 1e-9);
        }

        // The polar route of f succeeds exactly when dividing f by |f| does.
        std::vector<Complex> moduli(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) moduli[i] = Complex(std::abs(fs[i]), 0.0);
        const SequenceFactorization against_modulus =
            dfp_factor(f, SequenceFunction(moduli, Complex(std::abs(*f.limit), 0.0)), 1e-4);
        const SequenceFactorization polar_direct = wpdp_factor(f, 1e-4);
        CHECK(against_modulus.factor.has_value() == polar_direct.factor.has_value());
        CHECK(polar_direct.factor.has_value());
    }
}

TEST_CASE("three-term convexity reduction on sequences") {
    const Index depth = 64;
    const SequenceFunction zeros = constant(depth, 0.0, 0.0);
    const SequenceFunction ones = constant(depth, 1.0, 1.0);

    // t1 = 0 forces s = t2.
    std::vector<Complex> t2s(static_cast<size_t>(depth));
    for (Index n = 1; n <= depth; ++n) {
        t2s[static_cast<size_t>(n - 1)] = Complex(0.25 + 0.25 / static_cast<double>(n), 0.0);
    }
    const SequenceFunction t2(t2s, Complex(0.25, 0.0));
    std::vector<Complex> t3s(static_cast<size_t>(depth));
    for (Index n = 1; n <= depth; ++n) {
        t3s[static_cast<size_t>(n - 1)] = 1.0 - t2s[static_cast<size_t>(n - 1)];
    }
    const SequenceFunction t3(t3s, Complex(0.75, 0.0));
    const SequenceFactorization forced = substonean_reduce(zeros, t2, t3, 1e-2);
    REQUIRE(forced.factor.has_value());
    for (Index i = 0; i < depth; ++i) {
        CHECK(std::abs(forced.factor->samples[static_cast<size_t>(i)] -
                       t2.samples[static_cast<size_t>(i)]) <= 1e-15);
    }

    // Fully degenerate split: everything is free, the convention picks 1/2.
    const SequenceFactorization degenerate = substonean_reduce(ones, zeros, zeros);
    REQUIRE(degenerate.factor.has_value());
    for (const Complex& v : degenerate.factor->samples) CHECK(v == Complex(0.5, 0.0));
    CHECK(*degenerate.verdict.witness_limit == Complex(0.5, 0.0));

    // The pinned slanted example: s = 1/2 + 1/(2n) with witness 1/2.
    std::vector<Complex> t1s(static_cast<size_t>(depth), Complex(0.5, 0.0));
    std::vector<Complex> u2s(static_cast<size_t>(depth));
    std::vector<Complex> u3s(static_cast<size_t>(depth));
    for (Index n = 1; n <= depth; ++n) {
        const double v = 0.25 + 0.25 / static_cast<double>(n);
        u2s[static_cast<size_t>(n - 1)] = Complex(v, 0.0);
        u3s[static_cast<size_t>(n - 1)] = Complex(0.5 - v, 0.0);
    }
    const SequenceFactorization slanted =
        substonean_reduce(SequenceFunction(t1s, Complex(0.5, 0.0)),
                          SequenceFunction(u2s, Complex(0.25, 0.0)),
                          SequenceFunction(u3s, Complex(0.25, 0.0)), 5e-2);
    REQUIRE(slanted.factor.has_value());
    for (Index n = 1; n <= depth; ++n) {
        CHECK(std::abs(slanted.factor->samples[static_cast<size_t>(n - 1)] -
                       Complex(0.5 + 0.5 / static_cast<double>(n), 0.0)) <= 1e-14);
    }
    CHECK(std::abs(*slanted.verdict.witness_limit - Complex(0.5, 0.0)) <= 1e-12);

    CHECK_THROWS_AS(substonean_reduce(ones, ones, zeros), NotPartitionOfUnity);
}

TEST_CASE("the reduction identity holds for arbitrary evaluations") {
    oracle::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const Index depth = 24;
        std::vector<Complex> t1(static_cast<size_t>(depth));
        std::vector<Complex> t2(static_cast<size_t>(depth));
        std::vector<Complex> t3(static_cast<size_t>(depth));
        std::vector<Complex> f1(static_cast<size_t>(depth));
        std::vector<Complex> f2(static_cast<size_t>(depth));
        std::vector<Complex> f3(static_cast<size_t>(depth));
        for (Index i = 0; i < depth; ++i) {
            double u1 = rng.uniform();
            double u2 = rng.uniform();
            double u3 = rng.uniform();
            if (i % 7 == 0) u1 = 0.0;  // sprinkle degenerate points (t1 = 1)
            const double sum = u1 + u2 + u3;
            const double a1 = sum > 0.0 ? 1.0 - (u2 + u3) / sum : 1.0;
            const double a2 = sum > 0.0 ? u2 / sum : 0.0;
            t1[static_cast<size_t>(i)] = Complex(a1, 0.0);
            t2[static_cast<size_t>(i)] = Complex(a2, 0.0);
            t3[static_cast<size_t>(i)] = Complex(1.0 - a1 - a2, 0.0);
            f1[static_cast<size_t>(i)] = rng.complex_gaussian();
            f2[static_cast<size_t>(i)] = rng.complex_gaussian();
            f3[static_cast<size_t>(i)] = rng.complex_gaussian();
        }
        const SequenceFactorization outcome = substonean_reduce(
            SequenceFunction(t1, Complex(1.0, 0.0)), SequenceFunction(t2, Complex(0.0, 0.0)),
            SequenceFunction(t3, Complex(0.0, 0.0)), 3.0 /* any verdict: identity must hold */);
        REQUIRE(outcome.factor.has_value());
        for (Index i = 0; i < depth; ++i) {
            const size_t k = static_cast<size_t>(i);
            const Complex s = outcome.factor->samples[k];
            const Complex lhs = t1[k] * f1[k] + t2[k] * f2[k] + t3[k] * f3[k];
            const Complex rhs =
                t1[k] * f1[k] + (1.0 - t1[k]) * (s * f2[k] + (1.0 - s) * f3[k]);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }
}

TEST_CASE("zero isolation for sequences") {
    const auto accumulating = is_zero_isolated_sequence(harmonic(64));
    CHECK_FALSE(accumulating.isolated);
    CHECK(accumulating.gap == doctest::Approx(1.0 / (64.0 * 64.0)).epsilon(1e-12));

    const auto unit = is_zero_isolated_sequence(constant(64, 1.0, 1.0));
    CHECK(unit.isolated);
    CHECK(unit.gap == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<Complex> finite_support(64, Complex(0.0, 0.0));
    for (Index n = 1; n <= 5; ++n) finite_support[static_cast<size_t>(n - 1)] = Complex(1.0, 0.0);
    const auto isolated =
        is_zero_isolated_sequence(SequenceFunction(finite_support, Complex(0.0, 0.0)));
    CHECK(isolated.isolated);
    CHECK(isolated.gap == doctest::Approx(1.0).epsilon(1e-12));
}
