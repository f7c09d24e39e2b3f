#include "gvfit/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "gvfit/gvf.hpp"
#include "gvfit/mwk.hpp"

namespace gvfit {

namespace {

void require_length(const std::vector<double>& seq, std::size_t min_len, const char* what) {
    if (seq.size() < min_len)
        throw std::invalid_argument(std::string(what) + " needs at least " +
                                    std::to_string(min_len) + " values");
}

double value_range(const std::vector<double>& values) {
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

}  // namespace

int derivative_sign_changes(const std::vector<double>& seq) {
    require_length(seq, 2, "derivative_sign_changes");
    int changes = 0;
    int prev_sign = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        double diff = seq[i] - seq[i - 1];
        if (diff == 0.0) continue;  // zeros are ignored
        int sign = diff > 0.0 ? 1 : -1;
        if (prev_sign != 0 && sign != prev_sign) ++changes;
        prev_sign = sign;
    }
    return changes;
}

NaturalSmoothness1D natural_smoothness_1d(const std::vector<double>& seq) {
    require_length(seq, 2, "natural_smoothness_1d");
    NaturalSmoothness1D result;
    result.n_samples = static_cast<int>(seq.size());
    result.sign_changes = derivative_sign_changes(seq);
    result.ratio = static_cast<double>(result.n_samples - result.sign_changes) /
                   static_cast<double>(result.n_samples);
    return result;
}

int count_extreme_points(const std::vector<double>& values, int width, int height,
                         const ExtremePointOptions& opts) {
    if (width < 3 || height < 3)
        throw std::invalid_argument("extreme-point counting needs a grid of at least 3x3");
    if (values.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("field size does not match grid dimensions");

    const double range = value_range(values);
    const double gradient_tol = opts.gradient_tol_scale * range;
    const double degeneracy_tol = opts.degeneracy_tol_scale * range * range;
    auto at = [&](int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; };

    std::vector<char> extreme(values.size(), 0);
    for (int y = 1; y < height - 1; ++y) {
        for (int x = 1; x < width - 1; ++x) {
            double gx = (at(x + 1, y) - at(x - 1, y)) / 2.0;
            double gy = (at(x, y + 1) - at(x, y - 1)) / 2.0;
            if (std::abs(gx) > gradient_tol || std::abs(gy) > gradient_tol) continue;

            double fxx = at(x + 1, y) - 2.0 * at(x, y) + at(x - 1, y);
            double fyy = at(x, y + 1) - 2.0 * at(x, y) + at(x, y - 1);
            double fxy = (at(x + 1, y + 1) - at(x + 1, y - 1) - at(x - 1, y + 1) +
                          at(x - 1, y - 1)) / 4.0;
            double det = fxx * fyy - fxy * fxy;
            // Definite Hessian only: saddles (det < 0) and degenerate points
            // (det near 0, e.g. plateaus) are not extrema.
            if (det > degeneracy_tol) extreme[static_cast<std::size_t>(y) * width + x] = 1;
        }
    }

    // A connected run of extreme points is one extremum.
    int components = 0;
    std::vector<char> seen(values.size(), 0);
    for (int y = 1; y < height - 1; ++y) {
        for (int x = 1; x < width - 1; ++x) {
            std::size_t start = static_cast<std::size_t>(y) * width + x;
            if (!extreme[start] || seen[start]) continue;
            ++components;
            std::deque<std::pair<int, int>> queue{{x, y}};
            seen[start] = 1;
            while (!queue.empty()) {
                auto [cx, cy] = queue.front();
                queue.pop_front();
                constexpr int dx[4] = {1, -1, 0, 0};
                constexpr int dy[4] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    int nx = cx + dx[k], ny = cy + dy[k];
                    if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
                    std::size_t id = static_cast<std::size_t>(ny) * width + nx;
                    if (extreme[id] && !seen[id]) {
                        seen[id] = 1;
                        queue.emplace_back(nx, ny);
                    }
                }
            }
        }
    }
    return components;
}

NaturalSmoothnessKD natural_smoothness_kd(int sn, const std::vector<double>& values, int width,
                                          int height, const ExtremePointOptions& opts) {
    if (sn < 1) throw std::invalid_argument("sample count must be positive");
    NaturalSmoothnessKD result;
    result.sn = sn;
    result.en = count_extreme_points(values, width, height, opts);
    result.ratio_sn = static_cast<double>(sn - result.en) / static_cast<double>(sn);
    if (result.en == 0) {
        result.perfectly_smooth = true;
        result.ratio_en = std::numeric_limits<double>::quiet_NaN();
    } else {
        result.ratio_en = static_cast<double>(sn - result.en) / static_cast<double>(result.en);
    }
    return result;
}

DifferenceLadder difference_ladder(const std::vector<double>& seq, int kmax) {
    require_length(seq, 2, "difference_ladder");
    if (kmax < 1) throw std::invalid_argument("ladder depth must be positive");

    DifferenceLadder ladder;
    ladder.rows.push_back(seq);
    while (static_cast<int>(ladder.rows.size()) - 1 < kmax && ladder.rows.back().size() > 1) {
        const std::vector<double>& prev = ladder.rows.back();
        std::vector<double> next(prev.size() - 1);
        double max_abs = 0.0;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            next[i] = prev[i + 1] - prev[i];
            max_abs = std::max(max_abs, std::abs(next[i]));
        }
        ladder.rows.push_back(std::move(next));
        ladder.lip.push_back(max_abs);
    }

    if (ladder.lip.size() >= 2) {
        int k0 = static_cast<int>(ladder.lip.size()) - 1;
        while (k0 > 0 && ladder.lip[static_cast<std::size_t>(k0 - 1)] >
                             ladder.lip[static_cast<std::size_t>(k0)])
            --k0;
        if (k0 < static_cast<int>(ladder.lip.size()) - 1) ladder.decrease_onset = k0;
    }
    return ladder;
}

double lip_pairwise(const std::vector<double>& seq) {
    require_length(seq, 2, "lip_pairwise");
    double best = 0.0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            best = std::max(best, std::abs(seq[j] - seq[i]) / static_cast<double>(j - i));
    return best;
}

SmoothnessClass classify_discrete_smoothness(const DifferenceLadder& ladder, double c1,
                                             double c2) {
    if (c2 <= 0.0) throw std::invalid_argument("c2 must be positive");
    const std::vector<double>& lip = ladder.lip;
    const int depth = static_cast<int>(lip.size());
    if (depth < 2)
        throw std::invalid_argument("classification needs a ladder of depth at least 2");

    auto bound = [c1, c2](int k) { return c2 / std::exp2(static_cast<double>(k) - c1); };
    auto suffix_holds = [&](int after, auto&& pred) {
        for (int k = after + 1; k < depth; ++k)
            if (!pred(k)) return false;
        return true;
    };

    for (int k_abs = 0; k_abs + 1 < depth; ++k_abs)
        if (suffix_holds(k_abs, [&](int k) { return lip[static_cast<std::size_t>(k)] == 0.0; }))
            return {SmoothnessKind::absolute, k_abs, c1, c2};

    for (int k_alm = 0; k_alm + 1 < depth; ++k_alm)
        if (suffix_holds(k_alm,
                         [&](int k) { return lip[static_cast<std::size_t>(k)] < bound(k); }))
            return {SmoothnessKind::almost, k_alm, c1, c2};

    int k_ord = -1;
    for (int k = 0; k < depth && lip[static_cast<std::size_t>(k)] < bound(k); ++k) k_ord = k;
    if (k_ord >= 0) return {SmoothnessKind::k_order, k_ord, c1, c2};
    return {SmoothnessKind::unclassified, -1, c1, c2};
}

double default_classification_c2(const DifferenceLadder& ladder) {
    double base = ladder.lip.empty() ? 0.0 : ladder.lip.front();
    return std::max(base, 1.0);
}

namespace {

std::vector<int> stride_coordinates(int extent, int stride) {
    std::vector<int> coords;
    for (int x = 0; x < extent; x += stride) coords.push_back(x);
    if (coords.back() != extent - 1) coords.push_back(extent - 1);
    return coords;
}

void validate_stride(int stride, int extent, const char* axis) {
    if (stride < 1) throw std::invalid_argument("stride must be positive");
    if (stride >= extent)
        throw std::invalid_argument(std::string("stride ") + std::to_string(stride) +
                                    " must be smaller than the " + axis + " extent " +
                                    std::to_string(extent));
}

GvfStrategy to_gvf_strategy(DecomposeStrategy strategy) {
    switch (strategy) {
        case DecomposeStrategy::gvf_inf: return GvfStrategy::inf_envelope;
        case DecomposeStrategy::gvf_sup: return GvfStrategy::sup_envelope;
        default: return GvfStrategy::mid_envelope;
    }
}

// Macro reconstruction from a subsample: MWK mid with the tight constant, or
// gradually varied fill over the distinct sample values as levels.
std::vector<double> reconstruct_macro(const std::vector<Sample>& entries, const Domain& dom,
                                      DecomposeStrategy strategy) {
    SampleSet samples(entries, dom);
    if (strategy == DecomposeStrategy::mwk_mid)
        return mwk_mid_extension(samples, dom, MetricChoice::geodesic).values;

    std::vector<double> level_values;
    level_values.reserve(entries.size());
    for (const Sample& s : entries) level_values.push_back(s.value);
    std::sort(level_values.begin(), level_values.end());
    level_values.erase(std::unique(level_values.begin(), level_values.end()),
                       level_values.end());
    LevelSequence levels(level_values);

    std::vector<Sample> indexed;
    indexed.reserve(entries.size());
    for (const Sample& s : entries) {
        auto it = std::lower_bound(level_values.begin(), level_values.end(), s.value);
        int index1 = static_cast<int>(it - level_values.begin()) + 1;
        indexed.push_back({s.vertex, static_cast<double>(index1)});
    }

    ScalarField filled =
        gvf_fill(SampleSet(indexed, dom), dom, levels, to_gvf_strategy(strategy));
    std::vector<double> macro(filled.values.size());
    for (std::size_t v = 0; v < filled.values.size(); ++v)
        macro[v] = levels.value(static_cast<int>(filled.values[v]));
    return macro;
}

Decomposition subtract_macro(const std::vector<double>& original, std::vector<double> macro,
                             int stride) {
    Decomposition result;
    result.stride = stride;
    result.micro.values.resize(original.size());
    for (std::size_t v = 0; v < original.size(); ++v)
        result.micro.values[v] = original[v] - macro[v];
    result.macro.values = std::move(macro);
    return result;
}

}  // namespace

Decomposition decompose_micro_macro(const std::vector<double>& seq, int stride,
                                    DecomposeStrategy strategy) {
    require_length(seq, 2, "decompose_micro_macro");
    const int n = static_cast<int>(seq.size());
    validate_stride(stride, n, "path");
    if (stride == 1) return subtract_macro(seq, seq, stride);

    Domain dom = build_path_domain(n);
    std::vector<Sample> entries;
    for (int x : stride_coordinates(n, stride))
        entries.push_back({x, seq[static_cast<std::size_t>(x)]});
    return subtract_macro(seq, reconstruct_macro(entries, dom, strategy), stride);
}

Decomposition decompose_micro_macro(const std::vector<double>& values, int width, int height,
                                    int stride, DecomposeStrategy strategy) {
    if (width < 2 || height < 2)
        throw std::invalid_argument("grid decomposition needs at least 2x2");
    if (values.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("field size does not match grid dimensions");
    validate_stride(stride, width, "width");
    validate_stride(stride, height, "height");
    if (stride == 1) return subtract_macro(values, values, stride);

    Domain dom = build_grid_domain(width, height, 4);
    std::vector<Sample> entries;
    for (int y : stride_coordinates(height, stride))
        for (int x : stride_coordinates(width, stride)) {
            int v = y * width + x;
            entries.push_back({v, values[static_cast<std::size_t>(v)]});
        }
    return subtract_macro(values, reconstruct_macro(entries, dom, strategy), stride);
}

}  // namespace gvfit
