#include "gvfit/polish.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gvfit {

namespace {

void validate_config(const PolishConfig& cfg) {
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(cfg.relaxation > 0.0) || cfg.relaxation > 1.0)
        throw std::invalid_argument("relaxation must be in (0, 1]");
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be positive");
}

// Relaxed step toward target, clamped so rounding can never leave the
// [value, target] interval.
double step_toward(double value, double target, double relaxation) {
    double next = value + relaxation * (target - value);
    return std::clamp(next, std::min(value, target), std::max(value, target));
}

}  // namespace

double second_difference_residual(const std::vector<double>& seq, int i) {
    if (i < 0 || static_cast<std::size_t>(i) + 2 >= seq.size())
        throw std::invalid_argument("residual index " + std::to_string(i) +
                                    " leaves no centered triple");
    return std::abs(2.0 * seq[static_cast<std::size_t>(i) + 1] -
                    seq[static_cast<std::size_t>(i)] - seq[static_cast<std::size_t>(i) + 2]);
}

double general_slope_residual(const std::vector<double>& seq, const std::vector<double>& xs,
                              int i) {
    if (xs.size() != seq.size())
        throw std::invalid_argument("coordinate count does not match sequence length");
    if (i < 0 || static_cast<std::size_t>(i) + 2 >= seq.size())
        throw std::invalid_argument("residual index " + std::to_string(i) +
                                    " leaves no centered triple");
    for (std::size_t k = 1; k < xs.size(); ++k)
        if (!(xs[k - 1] < xs[k]))
            throw std::invalid_argument("coordinates must be strictly increasing");
    auto idx = static_cast<std::size_t>(i);
    double left = (seq[idx + 1] - seq[idx]) / (xs[idx + 1] - xs[idx]);
    double right = (seq[idx + 2] - seq[idx + 1]) / (xs[idx + 2] - xs[idx + 1]);
    return std::abs(left - right);
}

double default_polish_epsilon(const std::vector<double>& values) {
    if (values.empty()) return 1e-12;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double range = *hi - *lo;
    return range > 0.0 ? 1e-6 * range : 1e-12;
}

PolishOutcome polish_1d(const std::vector<double>& seq, const std::vector<bool>& guiding,
                        const PolishConfig& cfg) {
    validate_config(cfg);
    if (guiding.size() != seq.size())
        throw std::invalid_argument("guiding mask length does not match sequence length");

    PolishOutcome out;
    out.values = seq;
    const std::size_t n = seq.size();

    std::vector<std::size_t> free_interior;
    for (std::size_t j = 1; j + 1 < n; ++j)
        if (!guiding[j]) free_interior.push_back(j);

    // Convergence is judged at free interior points; with none, the input is
    // immutable and the check falls back to every interior point.
    std::vector<std::size_t> checked = free_interior;
    if (checked.empty())
        for (std::size_t j = 1; j + 1 < n; ++j) checked.push_back(j);

    auto max_checked_residual = [&]() {
        double worst = 0.0;
        for (std::size_t j : checked)
            worst = std::max(worst,
                             std::abs(2.0 * out.values[j] - out.values[j - 1] -
                                      out.values[j + 1]));
        return worst;
    };

    out.max_residual = max_checked_residual();
    if (out.max_residual <= cfg.epsilon || free_interior.empty()) {
        out.converged = out.max_residual <= cfg.epsilon;
        return out;
    }

    for (int sweep = 1; sweep <= cfg.max_iters; ++sweep) {
        for (std::size_t j : free_interior) {
            double residual =
                std::abs(2.0 * out.values[j] - out.values[j - 1] - out.values[j + 1]);
            if (residual > cfg.epsilon)
                out.values[j] = step_toward(out.values[j],
                                            (out.values[j - 1] + out.values[j + 1]) / 2.0,
                                            cfg.relaxation);
        }
        out.iterations = sweep;
        out.max_residual = max_checked_residual();
        if (out.max_residual <= cfg.epsilon) {
            out.converged = true;
            break;
        }
    }
    return out;
}

PolishOutcome polish_grid(const std::vector<double>& values, int width, int height,
                          const std::vector<bool>& guiding, const PolishConfig& cfg) {
    validate_config(cfg);
    if (width < 3 || height < 3)
        throw std::invalid_argument("grid polish needs at least a 3x3 grid");
    if (values.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("field size does not match grid dimensions");
    if (guiding.size() != values.size())
        throw std::invalid_argument("guiding mask length does not match field size");

    PolishOutcome out;
    out.values = values;
    auto id = [width](int x, int y) { return static_cast<std::size_t>(y) * width + x; };

    std::vector<std::pair<int, int>> free_interior;
    for (int y = 1; y < height - 1; ++y)
        for (int x = 1; x < width - 1; ++x)
            if (!guiding[id(x, y)]) free_interior.emplace_back(x, y);

    std::vector<std::pair<int, int>> checked = free_interior;
    if (checked.empty())
        for (int y = 1; y < height - 1; ++y)
            for (int x = 1; x < width - 1; ++x) checked.emplace_back(x, y);

    auto row_residual = [&](int x, int y) {
        return std::abs(2.0 * out.values[id(x, y)] - out.values[id(x - 1, y)] -
                        out.values[id(x + 1, y)]);
    };
    auto col_residual = [&](int x, int y) {
        return std::abs(2.0 * out.values[id(x, y)] - out.values[id(x, y - 1)] -
                        out.values[id(x, y + 1)]);
    };
    auto max_checked_residual = [&]() {
        double worst = 0.0;
        for (auto [x, y] : checked)
            worst = std::max({worst, row_residual(x, y), col_residual(x, y)});
        return worst;
    };

    out.max_residual = max_checked_residual();
    if (out.max_residual <= cfg.epsilon || free_interior.empty()) {
        out.converged = out.max_residual <= cfg.epsilon;
        return out;
    }

    for (int sweep = 1; sweep <= cfg.max_iters; ++sweep) {
        for (auto [x, y] : free_interior) {
            if (row_residual(x, y) > cfg.epsilon || col_residual(x, y) > cfg.epsilon) {
                double w = out.values[id(x - 1, y)], e = out.values[id(x + 1, y)];
                double s = out.values[id(x, y - 1)], nb = out.values[id(x, y + 1)];
                // Clamp into the neighbor hull so summation rounding cannot
                // push values outside the input range.
                double average = std::clamp((w + e + s + nb) / 4.0, std::min({w, e, s, nb}),
                                            std::max({w, e, s, nb}));
                out.values[id(x, y)] =
                    step_toward(out.values[id(x, y)], average, cfg.relaxation);
            }
        }
        out.iterations = sweep;
        out.max_residual = max_checked_residual();
        if (out.max_residual <= cfg.epsilon) {
            out.converged = true;
            break;
        }
    }
    return out;
}

}  // namespace gvfit
