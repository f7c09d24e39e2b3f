#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "gvfit/domain.hpp"

namespace gvfit {

/// Which gradually varied extension the fill returns. The lower and upper
/// distance envelopes are the pointwise extremes over all gradually varied
/// interpolants; mid takes floor of their average.
enum class GvfStrategy { inf_envelope, sup_envelope, mid_envelope };

/// A sample pair breaking the existence condition d(x, y) >= |i - j|.
struct FeasibilityViolation {
    int vertex_a = 0;
    int vertex_b = 0;
    int level_a = 0;
    int level_b = 0;
    int distance = 0;

    /// e.g. "(0,4): d=4 < |1-6|=5"
    std::string describe() const {
        int gap = level_a >= level_b ? level_a - level_b : level_b - level_a;
        return "(" + std::to_string(vertex_a) + "," + std::to_string(vertex_b) +
               "): d=" + std::to_string(distance) + " < |" + std::to_string(level_a) +
               "-" + std::to_string(level_b) + "|=" + std::to_string(gap);
    }
};

struct FeasibilityVerdict {
    bool feasible = true;
    std::optional<FeasibilityViolation> violation;
};

class GvfInfeasibleError : public std::runtime_error {
public:
    explicit GvfInfeasibleError(FeasibilityViolation violation)
        : std::runtime_error("no gradually varied extension exists: " + violation.describe()),
          violation_(violation) {}

    const FeasibilityViolation& violation() const noexcept { return violation_; }

private:
    FeasibilityViolation violation_;
};

struct GradualVariationCheck {
    bool gradually_varied = true;
    std::optional<std::pair<int, int>> violating_edge;
};

/// Existence test for a gradually varied extension: feasible iff every sample
/// pair satisfies d(x, y) >= |i - j|. Sample values must be whole level
/// indices in 1..n.
FeasibilityVerdict gvf_feasible(const SampleSet& samples, const Domain& dom,
                                const LevelSequence& levels);

/// Total gradually varied extension of the samples, as level indices.
/// lower(v) = max over samples p of (i_p - d(v, p)), clamped to >= 1;
/// upper(v) = min over samples p of (i_p + d(v, p)), clamped to <= n;
/// both are 1-Lipschitz in the hop metric, so each strategy's pick is
/// gradually varied. Throws GvfInfeasibleError when no extension exists.
ScalarField gvf_fill(const SampleSet& samples, const Domain& dom, const LevelSequence& levels,
                     GvfStrategy strategy = GvfStrategy::mid_envelope);

/// True iff level indices across every edge differ by at most 1.
GradualVariationCheck is_gradually_varied(const ScalarField& field, const Domain& dom,
                                          const LevelSequence& levels);

}  // namespace gvfit
