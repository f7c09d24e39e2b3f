#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace gvfit::cli;

// Shared --path/--grid/--adj flags; exactly one domain shape is required.
struct DomainFlags {
    int path_length = 0;
    std::string grid_spec;
    int adjacency = 4;

    void attach(CLI::App* cmd) {
        auto* path = cmd->add_option("--path", path_length, "Path domain with N vertices");
        auto* grid = cmd->add_option("--grid", grid_spec, "Grid domain, e.g. 16x16");
        cmd->add_option("--adj", adjacency, "Grid adjacency (4 or 8)")
            ->check(CLI::IsMember({4, 8}));
        path->excludes(grid);
        grid->excludes(path);
    }

    DomainSpec resolve() const {
        DomainSpec spec;
        spec.adjacency = adjacency;
        if (path_length > 0 && grid_spec.empty()) {
            spec.is_path = true;
            spec.path_length = path_length;
            return spec;
        }
        if (!grid_spec.empty()) {
            int w = 0, h = 0;
            char extra = 0;
            if (std::sscanf(grid_spec.c_str(), "%dx%d%c", &w, &h, &extra) != 2 || w < 1 ||
                h < 1)
                throw CLI::ValidationError("--grid", "expected WxH with positive dimensions");
            spec.is_path = false;
            spec.grid_width = w;
            spec.grid_height = h;
            return spec;
        }
        throw CLI::ValidationError("domain", "one of --path or --grid is required");
    }
};

std::vector<double> parse_levels(const std::string& list, const std::string& range) {
    std::vector<double> levels;
    if (!list.empty()) {
        std::size_t start = 0;
        while (start <= list.size()) {
            std::size_t comma = list.find(',', start);
            std::string token = list.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                std::size_t used = 0;
                levels.push_back(std::stod(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw CLI::ValidationError("--levels", "bad number '" + token + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return levels;
    }

    double lo = 0.0, hi = 0.0;
    int n = 0;
    char extra = 0;
    if (std::sscanf(range.c_str(), "%lf:%lf:%d%c", &lo, &hi, &n, &extra) != 3 || n < 1)
        throw CLI::ValidationError("--levels-range", "expected lo:hi:n with n >= 1");
    if (n == 1) return {lo};
    for (int k = 0; k < n; ++k)
        levels.push_back(lo + (hi - lo) * static_cast<double>(k) / (n - 1));
    return levels;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scalar field reconstruction and smoothness analysis on paths, grids, and graphs"};
    app.require_subcommand(1);

    // extend
    ExtendOptions extend;
    DomainFlags extend_domain;
    auto* cmd_ext = app.add_subcommand(
        "extend", "Lipschitz extension (inf/sup/mid) of real-valued samples");
    cmd_ext->add_option("--samples", extend.samples_path, "Sample CSV (x,value or x,y,value)")
        ->required();
    extend_domain.attach(cmd_ext);
    cmd_ext->add_option("--method", extend.method, "inf, sup, or mid")
        ->check(CLI::IsMember({"inf", "sup", "mid"}));
    double lip_override = 0.0;
    auto* lip_opt = cmd_ext->add_option("--lip", lip_override,
                                        "Slope bound (default: tight constant)");
    cmd_ext->add_option("--metric", extend.metric, "geodesic or euclidean")
        ->check(CLI::IsMember({"geodesic", "euclidean"}));
    cmd_ext->add_option("--out", extend.out_path, "Output field CSV")->required();

    // fit
    FitOptions fit;
    DomainFlags fit_domain;
    std::string levels_list, levels_range;
    auto* cmd_fit_app =
        app.add_subcommand("fit", "Gradually varied fill of level-indexed samples");
    cmd_fit_app->add_option("--samples", fit.samples_path, "Sample CSV with level indices")
        ->required();
    fit_domain.attach(cmd_fit_app);
    auto* lv = cmd_fit_app->add_option("--levels", levels_list, "Level values, e.g. 1,2,3");
    auto* lr = cmd_fit_app->add_option("--levels-range", levels_range,
                                       "Evenly spaced levels lo:hi:n");
    lv->excludes(lr);
    lr->excludes(lv);
    cmd_fit_app->add_option("--strategy", fit.strategy, "inf, sup, or mid envelope")
        ->check(CLI::IsMember({"inf", "sup", "mid"}));
    cmd_fit_app->add_option("--out", fit.out_path, "Output field CSV")->required();

    // analyze
    AnalyzeOptions analyze;
    auto* cmd_an = app.add_subcommand("analyze", "Smoothness report for a field file");
    cmd_an->add_option("--field", analyze.field_path, "Field CSV")->required();
    cmd_an->add_option("--ladder-depth", analyze.ladder_depth, "Difference ladder depth")
        ->check(CLI::PositiveNumber);
    double c1 = 0.0, c2 = 0.0;
    auto* c1_opt = cmd_an->add_option("--c1", c1, "Classification constant c1");
    auto* c2_opt = cmd_an->add_option("--c2", c2, "Classification constant c2");
    int sn = 0;
    auto* sn_opt = cmd_an->add_option("--sn", sn, "Sample count behind the field (k-D ratio)");
    cmd_an->add_option("--report", analyze.report_path, "Output report JSON")->required();
    cmd_an->add_option("--pgm", analyze.pgm_path, "Also write the field as a P2 image");

    // polish
    PolishOptions polish;
    auto* cmd_po = app.add_subcommand("polish", "Reduce second-difference residuals below epsilon");
    cmd_po->add_option("--field", polish.field_path, "Field CSV")->required();
    cmd_po->add_option("--guiding", polish.guiding_path, "Guiding CSV of frozen coordinates");
    double epsilon = 0.0;
    auto* eps_opt = cmd_po->add_option("--epsilon", epsilon,
                                       "Residual bound (default: 1e-6 of the value range)");
    cmd_po->add_option("--max-iters", polish.max_iters, "Sweep cap")->check(CLI::PositiveNumber);
    cmd_po->add_option("--relaxation", polish.relaxation, "Step fraction in (0,1]");
    int polish_sn = 0;
    auto* polish_sn_opt =
        cmd_po->add_option("--sn", polish_sn, "Sample count for before/after k-D ratios");
    cmd_po->add_option("--out", polish.out_path, "Output field CSV")->required();
    cmd_po->add_option("--report", polish.report_path, "Output report JSON")->required();

    // decompose
    DecomposeOptions decompose;
    auto* cmd_de = app.add_subcommand("decompose", "Split a field into macro and micro parts");
    cmd_de->add_option("--field", decompose.field_path, "Field CSV")->required();
    cmd_de->add_option("--stride", decompose.stride, "Subsample stride (>= 2)")->required();
    cmd_de->add_option("--strategy", decompose.strategy,
                       "mwk-mid, gvf-inf, gvf-sup, or gvf-mid")
        ->check(CLI::IsMember({"mwk-mid", "gvf-inf", "gvf-sup", "gvf-mid"}));
    cmd_de->add_option("--macro", decompose.macro_path, "Output macro field CSV")->required();
    cmd_de->add_option("--micro", decompose.micro_path, "Output micro field CSV")->required();

    try {
        app.parse(argc, argv);

        if (cmd_ext->parsed()) {
            extend.domain = extend_domain.resolve();
            if (lip_opt->count() > 0) extend.lip = lip_override;
            return cmd_extend(extend, std::cout, std::cerr);
        }
        if (cmd_fit_app->parsed()) {
            fit.domain = fit_domain.resolve();
            if (levels_list.empty() && levels_range.empty())
                throw CLI::ValidationError("levels",
                                           "one of --levels or --levels-range is required");
            fit.levels = parse_levels(levels_list, levels_range);
            return cmd_fit(fit, std::cout, std::cerr);
        }
        if (cmd_an->parsed()) {
            if (c1_opt->count() > 0) analyze.c1 = c1;
            if (c2_opt->count() > 0) analyze.c2 = c2;
            if (sn_opt->count() > 0) analyze.sn = sn;
            return cmd_analyze(analyze, std::cout, std::cerr);
        }
        if (cmd_po->parsed()) {
            if (eps_opt->count() > 0) polish.epsilon = epsilon;
            if (polish_sn_opt->count() > 0) polish.sn = polish_sn;
            return cmd_polish(polish, std::cout, std::cerr);
        }
        if (cmd_de->parsed()) return cmd_decompose(decompose, std::cout, std::cerr);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : gvfit::cli::kExitUsage;
    }
    return gvfit::cli::kExitUsage;
}
