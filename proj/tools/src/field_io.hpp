#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gvfit::io {

/// Malformed or incomplete input file; what() is a one-line diagnostic that
/// names the file and line.
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

/// A field file in memory: one value per position, row-major for grids.
struct FieldData {
    std::vector<double> values;
    bool two_d = false;
    int width = 0;   // meaningful when two_d
    int height = 0;

    int size() const { return static_cast<int>(values.size()); }
};

/// Sample rows: sparse (coordinate, value) pairs.
struct SampleRow {
    int x = 0;
    int y = 0;  // 2-D only
    double value = 0.0;
};

struct SamplesData {
    bool two_d = false;
    std::vector<SampleRow> rows;
};

/// Guiding rows: coordinates to freeze during polishing.
struct GuidingRow {
    int x = 0;
    int y = 0;
};

struct GuidingData {
    bool two_d = false;
    std::vector<GuidingRow> rows;
};

// CSV sample file, header `x,value` or `x,y,value`.
SamplesData read_sample_file(const std::string& path);

// CSV guiding file, header `x` or `x,y`.
GuidingData read_guiding_file(const std::string& path);

// CSV field file: 1-D `x,value` rows covering 0..n-1, or a
// `# width=W height=H` comment line followed by `x,y,value` covering the
// full grid. Completeness and duplicates are checked on load.
FieldData read_field_file(const std::string& path);
void write_field_file(const std::string& path, const FieldData& field);

// 8-bit grayscale P2 image of the field, min-max normalized.
void write_pgm(const std::string& path, const FieldData& field);

}  // namespace gvfit::io
