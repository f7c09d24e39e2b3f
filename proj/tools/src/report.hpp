#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gvfit/smoothness.hpp"

namespace gvfit::io {

/// Analysis results destined for a JSON report. Sections that were not
/// computed stay disengaged and their keys are omitted.
struct ReportData {
    std::optional<NaturalSmoothness1D> smoothness_1d;
    std::optional<NaturalSmoothnessKD> smoothness_kd;

    struct Ladder {
        std::vector<double> lip;
        std::optional<int> decrease_onset;
        SmoothnessClass classification;
    };
    std::optional<Ladder> ladder;

    struct Polish {
        bool converged = false;
        int iterations = 0;
        double max_residual = 0.0;
        std::optional<double> ratio_before;
        std::optional<double> ratio_after;
    };
    std::optional<Polish> polish;
};

/// Deterministic two-space-indented JSON with a fixed key order.
std::string render_report(const ReportData& report);

void write_report_file(const std::string& path, const ReportData& report);

}  // namespace gvfit::io
