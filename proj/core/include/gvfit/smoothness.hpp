#pragma once

#include <optional>
#include <vector>

#include "gvfit/domain.hpp"

namespace gvfit {

/// Sign changes of the first-difference sequence, zeros ignored.
int derivative_sign_changes(const std::vector<double>& seq);

/// 1-D natural smoothness R = (Nsamples - DerivativeSignChanges) / Nsamples.
struct NaturalSmoothness1D {
    int n_samples = 0;
    int sign_changes = 0;
    double ratio = 0.0;
};

NaturalSmoothness1D natural_smoothness_1d(const std::vector<double>& seq);

/// Tolerances for discrete critical-point detection, as fractions of the
/// field's value range (range squared for the Hessian determinant).
struct ExtremePointOptions {
    double gradient_tol_scale = 1e-9;
    double degeneracy_tol_scale = 1e-9;
};

/// Count of interior extreme points of a grid field: vertices whose central
/// difference gradient vanishes (within tolerance) and whose central second
/// difference Hessian is definite. Saddles and degenerate critical points do
/// not count, and a connected run of extreme points counts once.
int count_extreme_points(const std::vector<double>& values, int width, int height,
                         const ExtremePointOptions& opts = {});

/// k-D natural smoothness from a sample count and the reconstructed field.
/// ratio_en is the (sn - en) / en form; ratio_sn is (sn - en) / sn, the same
/// bookkeeping as the 1-D ratio. en == 0 sets the perfectly_smooth sentinel
/// and leaves ratio_en NaN.
struct NaturalSmoothnessKD {
    int sn = 0;
    int en = 0;
    bool perfectly_smooth = false;
    double ratio_en = 0.0;
    double ratio_sn = 0.0;
};

NaturalSmoothnessKD natural_smoothness_kd(int sn, const std::vector<double>& values, int width,
                                          int height, const ExtremePointOptions& opts = {});

/// Iterated first differences with per-depth Lipschitz constants.
/// rows[0] is the input; rows[k+1][x] = rows[k][x+1] - rows[k][x];
/// lip[k] = max |rows[k+1]|. decrease_onset is the start of the longest
/// strictly decreasing suffix of lip, when one exists (reporting only).
struct DifferenceLadder {
    std::vector<std::vector<double>> rows;
    std::vector<double> lip;
    std::optional<int> decrease_onset;
};

DifferenceLadder difference_ladder(const std::vector<double>& seq, int kmax = 16);

/// Max |f(x) - f(y)| / |x - y| over all index pairs. Exhaustive; equals
/// max |first difference| by telescoping, which tests verify independently.
double lip_pairwise(const std::vector<double>& seq);

enum class SmoothnessKind { absolute, almost, k_order, unclassified };

/// Ladder-based classification. absolute: lip is identically zero past K;
/// almost: lip[k] < c2 / 2^(k - c1) past K; k_order: that bound holds up
/// through K only.
struct SmoothnessClass {
    SmoothnessKind kind = SmoothnessKind::unclassified;
    int order = -1;  // the K of the matched definition, -1 when unclassified
    double c1 = 0.0;
    double c2 = 0.0;
};

SmoothnessClass classify_discrete_smoothness(const DifferenceLadder& ladder, double c1,
                                             double c2);

/// Default bound scale: max(lip[0], 1), linear in the base constant.
double default_classification_c2(const DifferenceLadder& ladder);

/// Reconstruction method for the macro component of a decomposition.
enum class DecomposeStrategy { mwk_mid, gvf_inf, gvf_sup, gvf_mid };

/// field = macro + micro, exactly, where macro is reconstructed from a
/// coarse subsample and micro is the residual.
struct Decomposition {
    ScalarField macro;
    ScalarField micro;
    int stride = 0;
};

/// Subsamples every stride-th position (plus the last one on each axis),
/// reconstructs the macro component with the chosen strategy, and returns the
/// residual as micro. stride must satisfy 1 <= stride < extent on every axis;
/// stride 1 is the identity split (macro = field, micro = 0).
Decomposition decompose_micro_macro(const std::vector<double>& seq, int stride,
                                    DecomposeStrategy strategy);
Decomposition decompose_micro_macro(const std::vector<double>& values, int width, int height,
                                    int stride, DecomposeStrategy strategy);

}  // namespace gvfit
