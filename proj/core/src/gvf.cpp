#include "gvfit/gvf.hpp"

#include <algorithm>
#include <cmath>

namespace gvfit {

namespace {

int checked_level_index(double value, int level_count, const char* what) {
    double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9 || rounded < 1.0 ||
        rounded > static_cast<double>(level_count))
        throw std::invalid_argument(std::string(what) + " value " + std::to_string(value) +
                                    " is not a level index in 1.." +
                                    std::to_string(level_count));
    return static_cast<int>(rounded);
}

std::vector<int> checked_sample_indices(const SampleSet& samples, const LevelSequence& levels) {
    std::vector<int> indices;
    indices.reserve(static_cast<std::size_t>(samples.size()));
    for (const Sample& s : samples.entries())
        indices.push_back(checked_level_index(s.value, levels.size(), "sample"));
    return indices;
}

// Hop distances from every sample vertex to the whole domain.
std::vector<std::vector<int>> sample_distance_rows(const SampleSet& samples, const Domain& dom) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(samples.size()));
    for (const Sample& s : samples.entries())
        rows.push_back(multi_source_distances(dom, {s.vertex}));
    return rows;
}

std::optional<FeasibilityViolation> find_violation(const SampleSet& samples,
                                                   const std::vector<int>& indices,
                                                   const std::vector<std::vector<int>>& rows) {
    const auto& entries = samples.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            int d = rows[i][static_cast<std::size_t>(entries[j].vertex)];
            int gap = std::abs(indices[i] - indices[j]);
            if (d < gap)
                return FeasibilityViolation{entries[i].vertex, entries[j].vertex,
                                            indices[i], indices[j], d};
        }
    }
    return std::nullopt;
}

}  // namespace

FeasibilityVerdict gvf_feasible(const SampleSet& samples, const Domain& dom,
                                const LevelSequence& levels) {
    const std::vector<int> indices = checked_sample_indices(samples, levels);
    const auto rows = sample_distance_rows(samples, dom);
    FeasibilityVerdict verdict;
    verdict.violation = find_violation(samples, indices, rows);
    verdict.feasible = !verdict.violation.has_value();
    return verdict;
}

ScalarField gvf_fill(const SampleSet& samples, const Domain& dom, const LevelSequence& levels,
                     GvfStrategy strategy) {
    const std::vector<int> indices = checked_sample_indices(samples, levels);
    const auto rows = sample_distance_rows(samples, dom);
    if (auto violation = find_violation(samples, indices, rows))
        throw GvfInfeasibleError(*violation);

    const int n = levels.size();
    const int v_count = dom.vertex_count();
    ScalarField out;
    out.is_level_indexed = true;
    out.values.resize(static_cast<std::size_t>(v_count));

    for (int v = 0; v < v_count; ++v) {
        int lower = 1;
        int upper = n;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            int d = rows[i][static_cast<std::size_t>(v)];
            lower = std::max(lower, indices[i] - d);
            upper = std::min(upper, indices[i] + d);
        }
        // Feasibility guarantees lower <= upper after clamping.
        int pick = 0;
        switch (strategy) {
            case GvfStrategy::inf_envelope: pick = lower; break;
            case GvfStrategy::sup_envelope: pick = upper; break;
            case GvfStrategy::mid_envelope: pick = (lower + upper) / 2; break;
        }
        out.values[static_cast<std::size_t>(v)] = static_cast<double>(pick);
    }
    return out;
}

GradualVariationCheck is_gradually_varied(const ScalarField& field, const Domain& dom,
                                          const LevelSequence& levels) {
    if (field.values.size() != static_cast<std::size_t>(dom.vertex_count()))
        throw std::invalid_argument("field is not total on the domain");

    std::vector<int> indices(field.values.size());
    for (std::size_t v = 0; v < field.values.size(); ++v)
        indices[v] = checked_level_index(field.values[v], levels.size(), "field");

    GradualVariationCheck check;
    for (int a = 0; a < dom.vertex_count(); ++a) {
        for (int b : dom.neighbors(a)) {
            if (b < a) continue;  // each edge once, lowest endpoint first
            if (std::abs(indices[static_cast<std::size_t>(a)] -
                         indices[static_cast<std::size_t>(b)]) > 1) {
                check.gradually_varied = false;
                check.violating_edge = {a, b};
                return check;
            }
        }
    }
    return check;
}

}  // namespace gvfit
