#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gvfit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;          // I/O, parse, or validation errors
inline constexpr int kExitInfeasibleLip = 2;  // requested lip below the tight constant
inline constexpr int kExitInfeasibleGvf = 3;  // no gradually varied extension exists

struct DomainSpec {
    bool is_path = true;
    int path_length = 0;
    int grid_width = 0;
    int grid_height = 0;
    int adjacency = 4;
};

struct ExtendOptions {
    std::string samples_path;
    DomainSpec domain;
    std::string method = "mid";  // inf | sup | mid
    std::optional<double> lip;
    std::string metric = "geodesic";  // geodesic | euclidean
    std::string out_path;
};

struct FitOptions {
    std::string samples_path;
    DomainSpec domain;
    std::vector<double> levels;
    std::string strategy = "mid";  // inf | sup | mid
    std::string out_path;
};

struct AnalyzeOptions {
    std::string field_path;
    int ladder_depth = 16;
    std::optional<double> c1;
    std::optional<double> c2;
    std::optional<int> sn;
    std::string report_path;
    std::string pgm_path;  // optional
};

struct PolishOptions {
    std::string field_path;
    std::string guiding_path;  // optional; empty freezes nothing
    std::optional<double> epsilon;
    int max_iters = 10000;
    double relaxation = 1.0;
    std::optional<int> sn;
    std::string out_path;
    std::string report_path;
};

struct DecomposeOptions {
    std::string field_path;
    int stride = 2;
    std::string strategy = "mwk-mid";  // mwk-mid | gvf-inf | gvf-sup | gvf-mid
    std::string macro_path;
    std::string micro_path;
};

int cmd_extend(const ExtendOptions& opts, std::ostream& out, std::ostream& err);
int cmd_fit(const FitOptions& opts, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_polish(const PolishOptions& opts, std::ostream& out, std::ostream& err);
int cmd_decompose(const DecomposeOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace gvfit::cli
