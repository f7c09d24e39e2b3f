#include "commands.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "gvfit/domain.hpp"
#include "gvfit/gvf.hpp"
#include "gvfit/mwk.hpp"
#include "gvfit/polish.hpp"
#include "gvfit/smoothness.hpp"

#include "field_io.hpp"
#include "report.hpp"

namespace gvfit::cli {

namespace {

Domain make_domain(const DomainSpec& spec) {
    if (spec.is_path) return build_path_domain(spec.path_length);
    return build_grid_domain(spec.grid_width, spec.grid_height, spec.adjacency);
}

// Sparse sample rows -> vertex samples on the domain, with coordinate checks.
std::vector<Sample> to_vertex_samples(const io::SamplesData& data, const Domain& dom) {
    if (data.two_d != dom.is_grid())
        throw std::invalid_argument(data.two_d
                                        ? "2-D samples need a --grid domain"
                                        : "1-D samples need a --path domain");
    std::vector<Sample> samples;
    samples.reserve(data.rows.size());
    for (const io::SampleRow& row : data.rows) {
        if (data.two_d) {
            if (row.x >= dom.width() || row.y >= dom.height())
                throw std::invalid_argument("sample (" + std::to_string(row.x) + "," +
                                            std::to_string(row.y) + ") is outside the grid");
            samples.push_back({row.y * dom.width() + row.x, row.value});
        } else {
            if (row.x >= dom.vertex_count())
                throw std::invalid_argument("sample x=" + std::to_string(row.x) +
                                            " is outside the path");
            samples.push_back({row.x, row.value});
        }
    }
    return samples;
}

MetricChoice parse_metric(const std::string& name) {
    if (name == "geodesic") return MetricChoice::geodesic;
    if (name == "euclidean") return MetricChoice::euclidean;
    throw std::invalid_argument("unknown metric '" + name + "'");
}

GvfStrategy parse_gvf_strategy(const std::string& name) {
    if (name == "inf") return GvfStrategy::inf_envelope;
    if (name == "sup") return GvfStrategy::sup_envelope;
    if (name == "mid") return GvfStrategy::mid_envelope;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

DecomposeStrategy parse_decompose_strategy(const std::string& name) {
    if (name == "mwk-mid") return DecomposeStrategy::mwk_mid;
    if (name == "gvf-inf") return DecomposeStrategy::gvf_inf;
    if (name == "gvf-sup") return DecomposeStrategy::gvf_sup;
    if (name == "gvf-mid") return DecomposeStrategy::gvf_mid;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

io::FieldData to_field_data(const std::vector<double>& values, const Domain& dom) {
    io::FieldData field;
    field.values = values;
    if (dom.is_grid()) {
        field.two_d = true;
        field.width = dom.width();
        field.height = dom.height();
    }
    return field;
}

// Def 4.2 ratio of a 2-D field when the sample count is known; disengaged
// when en = 0 (no finite ratio) or the grid has no interior.
std::optional<double> kd_ratio(const io::FieldData& field, std::optional<int> sn) {
    if (!sn || field.width < 3 || field.height < 3) return std::nullopt;
    NaturalSmoothnessKD r = natural_smoothness_kd(*sn, field.values, field.width, field.height);
    if (r.perfectly_smooth) return std::nullopt;
    return r.ratio_en;
}

int run_guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const GvfInfeasibleError& e) {
        err << "infeasible: " << e.violation().describe() << "\n";
        return kExitInfeasibleGvf;
    } catch (const InfeasibleLipError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInfeasibleLip;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int cmd_extend(const ExtendOptions& opts, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        Domain dom = make_domain(opts.domain);
        SampleSet samples(to_vertex_samples(io::read_sample_file(opts.samples_path), dom), dom);
        MetricChoice metric = parse_metric(opts.metric);

        LipschitzEstimate tight = lipschitz_constant(samples, dom, metric);
        out << "lip=" << io::format_double(tight.lip) << " witness=(" << tight.witness.first
            << "," << tight.witness.second << ")\n";

        double lip = opts.lip.value_or(tight.lip);
        ScalarField field;
        if (opts.method == "inf")
            field = mwk_inf_extension(samples, dom, lip, metric);
        else if (opts.method == "sup")
            field = mwk_sup_extension(samples, dom, lip, metric);
        else if (opts.method == "mid")
            field = mwk_mid_extension(samples, dom, lip, metric);
        else
            throw std::invalid_argument("unknown method '" + opts.method + "'");

        io::write_field_file(opts.out_path, to_field_data(field.values, dom));
    });
}

int cmd_fit(const FitOptions& opts, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        Domain dom = make_domain(opts.domain);
        SampleSet samples(to_vertex_samples(io::read_sample_file(opts.samples_path), dom), dom);
        LevelSequence levels(opts.levels);

        ScalarField filled = gvf_fill(samples, dom, levels, parse_gvf_strategy(opts.strategy));

        std::vector<double> real_values(filled.values.size());
        for (std::size_t v = 0; v < filled.values.size(); ++v)
            real_values[v] = levels.value(static_cast<int>(filled.values[v]));
        io::write_field_file(opts.out_path, to_field_data(real_values, dom));
        out << "fitted " << filled.values.size() << " vertices over " << levels.size()
            << " levels\n";
    });
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream&, std::ostream& err) {
    return run_guarded(err, [&] {
        io::FieldData field = io::read_field_file(opts.field_path);
        io::ReportData report;

        if (!field.two_d && field.size() >= 2) {
            report.smoothness_1d = natural_smoothness_1d(field.values);

            DifferenceLadder ladder = difference_ladder(field.values, opts.ladder_depth);
            if (ladder.lip.size() >= 2) {
                double c1 = opts.c1.value_or(0.0);
                double c2 = opts.c2.value_or(default_classification_c2(ladder));
                io::ReportData::Ladder section;
                section.lip = ladder.lip;
                section.decrease_onset = ladder.decrease_onset;
                section.classification = classify_discrete_smoothness(ladder, c1, c2);
                report.ladder = section;
            }
        }
        if (field.two_d && opts.sn)
            report.smoothness_kd =
                natural_smoothness_kd(*opts.sn, field.values, field.width, field.height);

        io::write_report_file(opts.report_path, report);
        if (!opts.pgm_path.empty()) io::write_pgm(opts.pgm_path, field);
    });
}

int cmd_polish(const PolishOptions& opts, std::ostream&, std::ostream& err) {
    return run_guarded(err, [&] {
        io::FieldData field = io::read_field_file(opts.field_path);

        std::vector<bool> guiding(field.values.size(), false);
        if (!opts.guiding_path.empty()) {
            io::GuidingData mask = io::read_guiding_file(opts.guiding_path);
            if (mask.two_d != field.two_d)
                throw std::invalid_argument("guiding file dimensionality does not match field");
            for (const io::GuidingRow& row : mask.rows) {
                if (field.two_d) {
                    if (row.x >= field.width || row.y >= field.height)
                        throw std::invalid_argument("guiding (" + std::to_string(row.x) + "," +
                                                    std::to_string(row.y) +
                                                    ") is outside the grid");
                    guiding[static_cast<std::size_t>(row.y) * field.width + row.x] = true;
                } else {
                    if (row.x >= field.size())
                        throw std::invalid_argument("guiding x=" + std::to_string(row.x) +
                                                    " is outside the field");
                    guiding[static_cast<std::size_t>(row.x)] = true;
                }
            }
        }

        PolishConfig cfg;
        cfg.epsilon = opts.epsilon.value_or(default_polish_epsilon(field.values));
        cfg.max_iters = opts.max_iters;
        cfg.relaxation = opts.relaxation;

        io::ReportData report;
        io::ReportData::Polish section;
        if (field.two_d) {
            section.ratio_before = kd_ratio(field, opts.sn);
            PolishOutcome outcome =
                polish_grid(field.values, field.width, field.height, guiding, cfg);
            field.values = outcome.values;
            section.ratio_after = kd_ratio(field, opts.sn);
            section.converged = outcome.converged;
            section.iterations = outcome.iterations;
            section.max_residual = outcome.max_residual;
        } else {
            if (field.size() >= 2)
                section.ratio_before = natural_smoothness_1d(field.values).ratio;
            PolishOutcome outcome = polish_1d(field.values, guiding, cfg);
            field.values = outcome.values;
            if (field.size() >= 2)
                section.ratio_after = natural_smoothness_1d(field.values).ratio;
            section.converged = outcome.converged;
            section.iterations = outcome.iterations;
            section.max_residual = outcome.max_residual;
        }
        report.polish = section;

        io::write_field_file(opts.out_path, field);
        io::write_report_file(opts.report_path, report);
    });
}

int cmd_decompose(const DecomposeOptions& opts, std::ostream&, std::ostream& err) {
    return run_guarded(err, [&] {
        io::FieldData field = io::read_field_file(opts.field_path);
        if (opts.stride < 2) throw std::invalid_argument("stride must be at least 2");
        DecomposeStrategy strategy = parse_decompose_strategy(opts.strategy);

        Decomposition d =
            field.two_d
                ? decompose_micro_macro(field.values, field.width, field.height, opts.stride,
                                        strategy)
                : decompose_micro_macro(field.values, opts.stride, strategy);

        for (std::size_t v = 0; v < field.values.size(); ++v)
            if (std::abs(d.macro.values[v] + d.micro.values[v] - field.values[v]) > 1e-12)
                throw std::runtime_error("decomposition failed to reconstruct the field");

        io::FieldData macro = field, micro = field;
        macro.values = d.macro.values;
        micro.values = d.micro.values;
        io::write_field_file(opts.macro_path, macro);
        io::write_field_file(opts.micro_path, micro);
    });
}

}  // namespace gvfit::cli
