#include "opalg/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace opalg {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Sample positions are x_n = 1/n for n = 1..N (index i holds n = i + 1).
double position(Index i) { return 1.0 / static_cast<double>(i + 1); }

struct ForcedSequence {
    std::vector<std::optional<Complex>> samples;
    std::optional<Complex> at_zero;
    Index depth() const { return static_cast<Index>(samples.size()); }
};

double max_pairwise_distance(const std::vector<Complex>& values) {
    double osc = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = i + 1; j < values.size(); ++j) {
            osc = std::max(osc, std::abs(values[i] - values[j]));
        }
    }
    return osc;
}

// Least-squares linear fit v ~ a + b x over the given points, evaluated at
// x = 0. With a single point this is the point's value. Exact for data that
// is affine in x, which is what makes declared-limit-free witnesses sharp.
Complex extrapolate_to_zero(const std::vector<std::pair<double, Complex>>& points) {
    if (points.size() == 1) return points.front().second;
    double sx = 0.0;
    double sxx = 0.0;
    Complex sv = 0.0;
    Complex sxv = 0.0;
    const double k = static_cast<double>(points.size());
    for (const auto& [x, v] : points) {
        sx += x;
        sxx += x * x;
        sv += v;
        sxv += x * v;
    }
    const double det = k * sxx - sx * sx;
    if (det <= 0.0) return sv / k;
    return (sv * sxx - sx * sxv) / det;
}

// Decides tail convergence of the forced values, chooses the limit, and fills
// free samples from their nearest forced neighbour (in x-distance).
SequenceFactorization extend_forced(const ForcedSequence& forced, Index tail_window,
                                    double tail_tol, const Complex& all_free_default) {
    const Index n = forced.depth();
    const Index window = std::clamp<Index>(tail_window, 1, std::max<Index>(n, 1));

    std::vector<Complex> tail_values;
    std::vector<std::pair<double, Complex>> tail_points;
    for (Index i = std::max<Index>(0, n - window); i < n; ++i) {
        if (forced.samples[static_cast<size_t>(i)]) {
            tail_values.push_back(*forced.samples[static_cast<size_t>(i)]);
            tail_points.emplace_back(position(i), *forced.samples[static_cast<size_t>(i)]);
        }
    }
    if (forced.at_zero) tail_values.push_back(*forced.at_zero);

    ExtensionVerdict verdict;
    verdict.oscillation = max_pairwise_distance(tail_values);
    verdict.extendable = verdict.oscillation <= tail_tol;

    SequenceFactorization out;
    out.verdict = verdict;
    if (!verdict.extendable) return out;

    // Value at 0: forced if present, otherwise extrapolated from the forced
    // tail, otherwise the nearest forced value, otherwise the free default.
    std::optional<Complex> witness;
    if (forced.at_zero) {
        witness = *forced.at_zero;
    } else if (!tail_points.empty()) {
        witness = extrapolate_to_zero(tail_points);
    } else {
        for (Index i = n - 1; i >= 0; --i) {
            if (forced.samples[static_cast<size_t>(i)]) {
                witness = *forced.samples[static_cast<size_t>(i)];
                break;
            }
        }
        if (!witness) witness = all_free_default;
    }
    out.verdict.witness_limit = witness;

    SequenceFunction filled;
    filled.samples.resize(static_cast<size_t>(n));
    filled.limit = witness;
    filled.tail_window = window;
    for (Index i = 0; i < n; ++i) {
        if (forced.samples[static_cast<size_t>(i)]) {
            filled.samples[static_cast<size_t>(i)] = *forced.samples[static_cast<size_t>(i)];
            continue;
        }
        double best = std::numeric_limits<double>::infinity();
        Index best_j = -1;
        for (Index j = 0; j < n; ++j) {
            if (!forced.samples[static_cast<size_t>(j)]) continue;
            const double dist = std::abs(position(i) - position(j));
            // Ties go to the deeper sample so the fill is deterministic.
            if (best_j < 0 || dist < best || (dist == best && j > best_j)) {
                best = dist;
                best_j = j;
            }
        }
        filled.samples[static_cast<size_t>(i)] =
            best_j >= 0 ? *forced.samples[static_cast<size_t>(best_j)] : all_free_default;
    }
    out.factor = std::move(filled);
    return out;
}

void require_same_depth(const SequenceFunction& a, const SequenceFunction& b, const char* who) {
    if (a.depth() != b.depth()) {
        throw DimensionMismatch(std::string(who) + ": sequence depths must agree");
    }
}

}  // namespace

SequenceFunction::SequenceFunction(std::vector<Complex> samples_in, std::optional<Complex> limit_in,
                                   Index tail_window_in, bool assert_continuity, double tail_tol)
    : samples(std::move(samples_in)), limit(limit_in) {
    if (samples.empty()) throw InvalidArgument("SequenceFunction: depth must be positive");
    for (const Complex& z : samples) {
        if (!finite(z)) throw InvalidArgument("SequenceFunction: samples must be finite");
    }
    if (limit && !finite(*limit)) throw InvalidArgument("SequenceFunction: limit must be finite");
    tail_window = tail_window_in > 0 ? tail_window_in : std::max<Index>(1, depth() / 4);
    if (tail_window > depth()) {
        throw InvalidArgument("SequenceFunction: tail window exceeds depth");
    }
    if (assert_continuity) {
        if (!limit) throw InvalidArgument("SequenceFunction: continuity check needs a limit");
        for (Index i = depth() - tail_window; i < depth(); ++i) {
            if (std::abs(samples[static_cast<size_t>(i)] - *limit) > tail_tol) {
                throw InvalidArgument("SequenceFunction: tail is not within tail_tol of the limit");
            }
        }
    }
}

SequenceFactorization wpdp_factor(const SequenceFunction& f, double tail_tol) {
    if (!f.limit) throw InvalidArgument("wpdp_factor: input must carry a limit");
    ForcedSequence forced;
    forced.samples.resize(static_cast<size_t>(f.depth()));
    for (Index i = 0; i < f.depth(); ++i) {
        const Complex z = f.samples[static_cast<size_t>(i)];
        if (std::abs(z) != 0.0) forced.samples[static_cast<size_t>(i)] = z / std::abs(z);
    }
    if (std::abs(*f.limit) != 0.0) forced.at_zero = *f.limit / std::abs(*f.limit);
    return extend_forced(forced, f.tail_window, tail_tol, Complex(0.0, 0.0));
}

SequenceFactorization dfp_factor(const SequenceFunction& f, const SequenceFunction& g,
                                 double tail_tol) {
    require_same_depth(f, g, "dfp_factor");
    for (Index i = 0; i < f.depth(); ++i) {
        if (std::abs(f.samples[static_cast<size_t>(i)]) >
            std::abs(g.samples[static_cast<size_t>(i)]) + tail_tol) {
            throw MajorizationFails("dfp_factor: |f| exceeds |g| at a sample");
        }
    }
    if (f.limit && g.limit && std::abs(*f.limit) > std::abs(*g.limit) + tail_tol) {
        throw MajorizationFails("dfp_factor: |f| exceeds |g| at the limit");
    }
    ForcedSequence forced;
    forced.samples.resize(static_cast<size_t>(f.depth()));
    for (Index i = 0; i < f.depth(); ++i) {
        const Complex gz = g.samples[static_cast<size_t>(i)];
        if (std::abs(gz) != 0.0) {
            forced.samples[static_cast<size_t>(i)] = f.samples[static_cast<size_t>(i)] / gz;
        }
    }
    if (f.limit && g.limit && std::abs(*g.limit) != 0.0) forced.at_zero = *f.limit / *g.limit;
    return extend_forced(forced, g.tail_window, tail_tol, Complex(0.0, 0.0));
}

SequenceFactorization wpdp_to_dfp(const SequenceFunction& f, const SequenceFunction& g,
                                  double tail_tol) {
    require_same_depth(f, g, "wpdp_to_dfp");
    if (!f.limit || !g.limit) throw InvalidArgument("wpdp_to_dfp: inputs must carry limits");
    for (Index i = 0; i < f.depth(); ++i) {
        if (std::abs(f.samples[static_cast<size_t>(i)]) >
            std::abs(g.samples[static_cast<size_t>(i)]) + tail_tol) {
            throw MajorizationFails("wpdp_to_dfp: |f| exceeds |g| at a sample");
        }
    }
    if (std::abs(*f.limit) > std::abs(*g.limit) + tail_tol) {
        throw MajorizationFails("wpdp_to_dfp: |f| exceeds |g| at the limit");
    }

    // s = |f| + i sqrt(|g|^2 - |f|^2); note |s| = |g| pointwise.
    auto lift = [](const Complex& fv, const Complex& gv) {
        const double af = std::abs(fv);
        const double ag = std::abs(gv);
        return Complex(af, std::sqrt(std::max(0.0, ag * ag - af * af)));
    };
    SequenceFunction s;
    s.samples.resize(f.samples.size());
    for (size_t i = 0; i < f.samples.size(); ++i) s.samples[i] = lift(f.samples[i], g.samples[i]);
    s.limit = lift(*f.limit, *g.limit);
    s.tail_window = f.tail_window;

    const SequenceFactorization v = wpdp_factor(s, tail_tol);
    const SequenceFactorization vf = wpdp_factor(f, tail_tol);
    const SequenceFactorization vg = wpdp_factor(g, tail_tol);

    SequenceFactorization out;
    out.verdict.oscillation = std::max({v.verdict.oscillation, vf.verdict.oscillation,
                                        vg.verdict.oscillation});
    out.verdict.extendable =
        v.verdict.extendable && vf.verdict.extendable && vg.verdict.extendable;
    if (!out.verdict.extendable) return out;

    auto combine = [](const Complex& pv, const Complex& pf, const Complex& pg) {
        return pf * pv.real() * std::conj(pg);
    };
    SequenceFunction h;
    h.samples.resize(f.samples.size());
    for (size_t i = 0; i < f.samples.size(); ++i) {
        h.samples[i] = combine(v.factor->samples[i], vf.factor->samples[i], vg.factor->samples[i]);
    }
    h.limit = combine(*v.factor->limit, *vf.factor->limit, *vg.factor->limit);
    h.tail_window = f.tail_window;

    double scale = 1.0;
    for (const Complex& z : f.samples) scale = std::max(scale, std::abs(z));
    for (size_t i = 0; i < f.samples.size(); ++i) {
        if (std::abs(f.samples[i] - h.samples[i] * g.samples[i]) > tail_tol * scale + 1e-12) {
            throw Error("wpdp_to_dfp: reconstructed factor does not reproduce f");
        }
    }
    out.verdict.witness_limit = *h.limit;
    out.factor = std::move(h);
    return out;
}

SequenceFactorization substonean_reduce(const SequenceFunction& t1, const SequenceFunction& t2,
                                        const SequenceFunction& t3, double tail_tol) {
    require_same_depth(t1, t2, "substonean_reduce");
    require_same_depth(t1, t3, "substonean_reduce");
    auto check_value = [&](const Complex& a, const Complex& b, const Complex& c) {
        auto in_unit = [&](const Complex& z) {
            return std::abs(z.imag()) <= tail_tol && z.real() >= -tail_tol &&
                   z.real() <= 1.0 + tail_tol;
        };
        if (!in_unit(a) || !in_unit(b) || !in_unit(c) || std::abs(a + b + c - 1.0) > tail_tol) {
            throw NotPartitionOfUnity(
                "substonean_reduce: coefficients must lie in [0,1] and sum to 1");
        }
    };
    for (Index i = 0; i < t1.depth(); ++i) {
        check_value(t1.samples[static_cast<size_t>(i)], t2.samples[static_cast<size_t>(i)],
                    t3.samples[static_cast<size_t>(i)]);
    }
    const bool limits = t1.limit && t2.limit && t3.limit;
    if (limits) check_value(*t1.limit, *t2.limit, *t3.limit);

    auto quotient = [](const Complex& t1v, const Complex& t2v) -> std::optional<Complex> {
        const Complex denom = 1.0 - t1v;
        if (std::abs(denom) == 0.0) return std::nullopt;
        const double s = std::clamp((t2v / denom).real(), 0.0, 1.0);
        return Complex(s, 0.0);
    };
    ForcedSequence forced;
    forced.samples.resize(static_cast<size_t>(t1.depth()));
    for (Index i = 0; i < t1.depth(); ++i) {
        forced.samples[static_cast<size_t>(i)] =
            quotient(t1.samples[static_cast<size_t>(i)], t2.samples[static_cast<size_t>(i)]);
    }
    if (limits) forced.at_zero = quotient(*t1.limit, *t2.limit);
    return extend_forced(forced, t1.tail_window, tail_tol, Complex(0.5, 0.0));
}

ZeroIsolation is_zero_isolated_sequence(const SequenceFunction& g, double gap_tol) {
    if (!g.limit) throw InvalidArgument("is_zero_isolated_sequence: input must carry a limit");
    std::vector<double> spectrum;
    spectrum.reserve(g.samples.size() + 1);
    for (const Complex& z : g.samples) spectrum.push_back(std::norm(z));
    spectrum.push_back(std::norm(*g.limit));

    ZeroIsolation out;
    double global_min = std::numeric_limits<double>::infinity();
    for (double v : spectrum) {
        if (v > 0.0) global_min = std::min(global_min, v);
    }
    if (!std::isfinite(global_min)) {
        out.isolated = true;  // spectrum is {0}
        out.gap = 0.0;
        return out;
    }
    out.gap = global_min;

    double tail_min = std::numeric_limits<double>::infinity();
    for (Index i = g.depth() - g.tail_window; i < g.depth(); ++i) {
        const double v = spectrum[static_cast<size_t>(i)];
        if (v > 0.0) tail_min = std::min(tail_min, v);
    }
    if (std::norm(*g.limit) > 0.0) tail_min = std::min(tail_min, std::norm(*g.limit));
    out.isolated = !std::isfinite(tail_min) || tail_min >= gap_tol;
    return out;
}

}  // namespace opalg
