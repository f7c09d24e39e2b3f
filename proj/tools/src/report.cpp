#include "report.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "field_io.hpp"

namespace gvfit::io {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* class_name(SmoothnessKind kind) {
    switch (kind) {
        case SmoothnessKind::absolute: return "absolute";
        case SmoothnessKind::almost: return "almost";
        case SmoothnessKind::k_order: return "k_order";
        default: return "unclassified";
    }
}

ordered_json optional_number(const std::optional<double>& v) {
    if (v && std::isfinite(*v)) return *v;
    return nullptr;
}

}  // namespace

std::string render_report(const ReportData& report) {
    ordered_json doc = ordered_json::object();

    if (report.smoothness_1d) {
        const auto& s = *report.smoothness_1d;
        doc["natural_smoothness_1d"] = {
            {"n_samples", s.n_samples},
            {"sign_changes", s.sign_changes},
            {"ratio", s.ratio},
        };
    }
    if (report.smoothness_kd) {
        const auto& s = *report.smoothness_kd;
        ordered_json kd;
        kd["sn"] = s.sn;
        kd["en"] = s.en;
        kd["ratio_paper"] = s.perfectly_smooth ? ordered_json(nullptr) : ordered_json(s.ratio_en);
        kd["ratio_alt"] = s.ratio_sn;
        kd["perfectly_smooth"] = s.perfectly_smooth;
        doc["natural_smoothness_kd"] = kd;
    }
    if (report.ladder) {
        const auto& l = *report.ladder;
        ordered_json ladder;
        ladder["lip"] = l.lip;
        ladder["decrease_onset"] =
            l.decrease_onset ? ordered_json(*l.decrease_onset) : ordered_json(nullptr);
        ladder["class"] = class_name(l.classification.kind);
        ladder["K"] = l.classification.order;
        ladder["c1"] = l.classification.c1;
        ladder["c2"] = l.classification.c2;
        doc["ladder"] = ladder;
    }
    if (report.polish) {
        const auto& p = *report.polish;
        ordered_json polish;
        polish["converged"] = p.converged;
        polish["iterations"] = p.iterations;
        polish["max_residual"] = p.max_residual;
        polish["ratio_before"] = optional_number(p.ratio_before);
        polish["ratio_after"] = optional_number(p.ratio_after);
        doc["polish"] = polish;
    }

    return doc.dump(2) + "\n";
}

void write_report_file(const std::string& path, const ReportData& report) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << render_report(report);
    if (!out.good()) throw ParseError("failed while writing " + path);
}

}  // namespace gvfit::io
