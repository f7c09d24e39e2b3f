#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "gvfit/domain.hpp"

namespace gvfit {

/// Metric the extensions measure distances in. Geodesic hop distance works on
/// every domain; euclidean distance needs lattice coordinates, so it is only
/// accepted on path and grid domains.
enum class MetricChoice { geodesic, euclidean };

/// Tight Lipschitz constant of a sample set together with a pair attaining it.
/// A single sample has constant 0 and a degenerate (v, v) witness.
struct LipschitzEstimate {
    double lip = 0.0;
    std::pair<int, int> witness{0, 0};
};

/// Requested slope bound is below the tight constant of the samples, so the
/// closed-form extensions would fail to interpolate.
class InfeasibleLipError : public std::runtime_error {
public:
    InfeasibleLipError(double requested, double required)
        : std::runtime_error("lip " + std::to_string(requested) +
                             " is below the tight Lipschitz constant " +
                             std::to_string(required)),
          requested_(requested),
          required_(required) {}

    double requested() const noexcept { return requested_; }
    double required() const noexcept { return required_; }

private:
    double requested_;
    double required_;
};

/// Two samples at metric distance zero with different values. Unreachable
/// through SampleSet (vertex ids are distinct and both metrics separate
/// distinct vertices); kept as a guard.
class InfiniteLipschitzError : public std::runtime_error {
public:
    InfiniteLipschitzError(int a, int b)
        : std::runtime_error("samples at vertices " + std::to_string(a) + " and " +
                             std::to_string(b) +
                             " are at distance zero with different values") {}
};

/// Smallest L with |f(x) - f(y)| <= L d(x, y) over all sample pairs.
LipschitzEstimate lipschitz_constant(const SampleSet& samples, const Domain& dom,
                                     MetricChoice metric = MetricChoice::geodesic);

/// Pointwise minimal lip-Lipschitz interpolant:
///   F(x) = max over samples a of { f(a) - lip * d(a, x) }.
ScalarField mwk_inf_extension(const SampleSet& samples, const Domain& dom, double lip,
                              MetricChoice metric = MetricChoice::geodesic);

/// Pointwise maximal lip-Lipschitz interpolant:
///   F(x) = min over samples a of { f(a) + lip * d(a, x) }.
ScalarField mwk_sup_extension(const SampleSet& samples, const Domain& dom, double lip,
                              MetricChoice metric = MetricChoice::geodesic);

/// Average of the minimal and maximal extensions, (INF + SUP) / 2.
ScalarField mwk_mid_extension(const SampleSet& samples, const Domain& dom, double lip,
                              MetricChoice metric = MetricChoice::geodesic);

// Convenience overloads using the tight constant of the samples.
ScalarField mwk_inf_extension(const SampleSet& samples, const Domain& dom,
                              MetricChoice metric = MetricChoice::geodesic);
ScalarField mwk_sup_extension(const SampleSet& samples, const Domain& dom,
                              MetricChoice metric = MetricChoice::geodesic);
ScalarField mwk_mid_extension(const SampleSet& samples, const Domain& dom,
                              MetricChoice metric = MetricChoice::geodesic);

/// Metric distance between two vertices under the given choice.
double metric_distance(const Domain& dom, int u, int v, MetricChoice metric);

}  // namespace gvfit
