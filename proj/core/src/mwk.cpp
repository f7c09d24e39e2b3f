#include "gvfit/mwk.hpp"

#include <cmath>
#include <limits>

namespace gvfit {

namespace {

void require_metric_supported(const Domain& dom, MetricChoice metric) {
    if (metric == MetricChoice::euclidean && !dom.has_coordinates())
        throw std::invalid_argument("euclidean metric requires a path or grid domain");
}

double euclidean_distance(const Domain& dom, int u, int v) {
    auto [ux, uy] = dom.coordinate(u);
    auto [vx, vy] = dom.coordinate(v);
    return std::hypot(static_cast<double>(ux - vx), static_cast<double>(uy - vy));
}

// Distances from one sample vertex to every vertex of the domain.
std::vector<double> distance_row(const Domain& dom, int src, MetricChoice metric) {
    std::vector<double> row(static_cast<std::size_t>(dom.vertex_count()));
    if (metric == MetricChoice::geodesic) {
        std::vector<int> hops = multi_source_distances(dom, {src});
        for (std::size_t v = 0; v < row.size(); ++v) row[v] = static_cast<double>(hops[v]);
    } else {
        for (int v = 0; v < dom.vertex_count(); ++v)
            row[static_cast<std::size_t>(v)] = euclidean_distance(dom, src, v);
    }
    return row;
}

std::vector<std::vector<double>> distance_rows(const SampleSet& samples, const Domain& dom,
                                               MetricChoice metric) {
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(samples.size()));
    for (const Sample& s : samples.entries()) rows.push_back(distance_row(dom, s.vertex, metric));
    return rows;
}

LipschitzEstimate estimate_from_rows(const SampleSet& samples,
                                     const std::vector<std::vector<double>>& rows) {
    const auto& entries = samples.entries();
    LipschitzEstimate est;
    est.witness = {entries.front().vertex, entries.front().vertex};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            double d = rows[i][static_cast<std::size_t>(entries[j].vertex)];
            double dv = std::abs(entries[i].value - entries[j].value);
            if (d == 0.0) {
                if (dv != 0.0)
                    throw InfiniteLipschitzError(entries[i].vertex, entries[j].vertex);
                continue;
            }
            double ratio = dv / d;
            if (ratio > est.lip) {
                est.lip = ratio;
                est.witness = {entries[i].vertex, entries[j].vertex};
            }
        }
    }
    return est;
}

enum class ExtensionKind { inf, sup, mid };

ScalarField extend(const SampleSet& samples, const Domain& dom, double lip,
                   MetricChoice metric, ExtensionKind kind) {
    require_metric_supported(dom, metric);
    const auto rows = distance_rows(samples, dom, metric);
    const LipschitzEstimate tight = estimate_from_rows(samples, rows);
    // Reject only when meaningfully below the tight constant; ulp-level
    // discrepancies from recomputing it are not an infeasible request.
    if (lip < tight.lip && tight.lip - lip > 1e-12 * std::max(1.0, tight.lip))
        throw InfeasibleLipError(lip, tight.lip);

    const auto& entries = samples.entries();
    const int v_count = dom.vertex_count();
    ScalarField out;
    out.values.resize(static_cast<std::size_t>(v_count));

    for (int v = 0; v < v_count; ++v) {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            double reach = lip * rows[i][static_cast<std::size_t>(v)];
            lo = std::max(lo, entries[i].value - reach);
            hi = std::min(hi, entries[i].value + reach);
        }
        // At tight lip the envelopes meet; rounding can cross them by an ulp,
        // so order-normalize. min+max == lo+hi, which keeps the mid function
        // exactly the average of the returned inf and sup extensions.
        double& slot = out.values[static_cast<std::size_t>(v)];
        switch (kind) {
            case ExtensionKind::inf: slot = std::min(lo, hi); break;
            case ExtensionKind::sup: slot = std::max(lo, hi); break;
            case ExtensionKind::mid: slot = (lo + hi) / 2.0; break;
        }
    }
    return out;
}

}  // namespace

LipschitzEstimate lipschitz_constant(const SampleSet& samples, const Domain& dom,
                                     MetricChoice metric) {
    require_metric_supported(dom, metric);
    return estimate_from_rows(samples, distance_rows(samples, dom, metric));
}

ScalarField mwk_inf_extension(const SampleSet& samples, const Domain& dom, double lip,
                              MetricChoice metric) {
    return extend(samples, dom, lip, metric, ExtensionKind::inf);
}

ScalarField mwk_sup_extension(const SampleSet& samples, const Domain& dom, double lip,
                              MetricChoice metric) {
    return extend(samples, dom, lip, metric, ExtensionKind::sup);
}

ScalarField mwk_mid_extension(const SampleSet& samples, const Domain& dom, double lip,
                              MetricChoice metric) {
    return extend(samples, dom, lip, metric, ExtensionKind::mid);
}

ScalarField mwk_inf_extension(const SampleSet& samples, const Domain& dom, MetricChoice metric) {
    return extend(samples, dom, lipschitz_constant(samples, dom, metric).lip, metric,
                  ExtensionKind::inf);
}

ScalarField mwk_sup_extension(const SampleSet& samples, const Domain& dom, MetricChoice metric) {
    return extend(samples, dom, lipschitz_constant(samples, dom, metric).lip, metric,
                  ExtensionKind::sup);
}

ScalarField mwk_mid_extension(const SampleSet& samples, const Domain& dom, MetricChoice metric) {
    return extend(samples, dom, lipschitz_constant(samples, dom, metric).lip, metric,
                  ExtensionKind::mid);
}

double metric_distance(const Domain& dom, int u, int v, MetricChoice metric) {
    require_metric_supported(dom, metric);
    if (metric == MetricChoice::geodesic)
        return static_cast<double>(geodesic_distance(dom, u, v));
    return euclidean_distance(dom, u, v);
}

}  // namespace gvfit
