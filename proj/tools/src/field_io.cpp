#include "field_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace gvfit::io {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& message) {
    throw ParseError(path + " line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

int parse_coordinate(const std::string& token, const std::string& path, std::size_t line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        fail(path, line, "expected a nonnegative integer coordinate, got '" + token + "'");
    return value;
}

double parse_value(const std::string& token, const std::string& path, std::size_t line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value))
        fail(path, line, "expected a finite number, got '" + token + "'");
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buffer[40];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return std::string(buffer, ptr);
}

SamplesData read_sample_file(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw ParseError(path + " line 1: missing header row");

    SamplesData data;
    if (lines[0] == "x,value") {
        data.two_d = false;
    } else if (lines[0] == "x,y,value") {
        data.two_d = true;
    } else {
        fail(path, 1, "expected header 'x,value' or 'x,y,value'");
    }

    const std::size_t expected = data.two_d ? 3 : 2;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = split_fields(lines[i]);
        if (fields.size() != expected)
            fail(path, i + 1, "expected " + std::to_string(expected) + " fields, got " +
                                  std::to_string(fields.size()));
        SampleRow row;
        row.x = parse_coordinate(fields[0], path, i + 1);
        if (data.two_d) row.y = parse_coordinate(fields[1], path, i + 1);
        row.value = parse_value(fields.back(), path, i + 1);
        for (const SampleRow& other : data.rows)
            if (other.x == row.x && other.y == row.y)
                fail(path, i + 1, "duplicate coordinate");
        data.rows.push_back(row);
    }
    if (data.rows.empty()) throw ParseError(path + ": no sample rows");
    return data;
}

GuidingData read_guiding_file(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw ParseError(path + " line 1: missing header row");

    GuidingData data;
    if (lines[0] == "x") {
        data.two_d = false;
    } else if (lines[0] == "x,y") {
        data.two_d = true;
    } else {
        fail(path, 1, "expected header 'x' or 'x,y'");
    }

    const std::size_t expected = data.two_d ? 2 : 1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = split_fields(lines[i]);
        if (fields.size() != expected)
            fail(path, i + 1, "expected " + std::to_string(expected) + " fields, got " +
                                  std::to_string(fields.size()));
        GuidingRow row;
        row.x = parse_coordinate(fields[0], path, i + 1);
        if (data.two_d) row.y = parse_coordinate(fields[1], path, i + 1);
        data.rows.push_back(row);
    }
    return data;
}

FieldData read_field_file(const std::string& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) throw ParseError(path + " line 1: empty field file");

    FieldData field;
    std::size_t first_row;
    if (lines[0].rfind("# width=", 0) == 0) {
        field.two_d = true;
        int w = 0, h = 0;
        if (std::sscanf(lines[0].c_str(), "# width=%d height=%d", &w, &h) != 2 || w < 1 ||
            h < 1)
            fail(path, 1, "expected '# width=W height=H'");
        field.width = w;
        field.height = h;
        if (lines.size() < 2 || lines[1] != "x,y,value")
            fail(path, 2, "expected header 'x,y,value'");
        first_row = 2;
        field.values.assign(static_cast<std::size_t>(w) * h, 0.0);
    } else {
        if (lines[0] != "x,value") fail(path, 1, "expected header 'x,value'");
        first_row = 1;
    }

    if (field.two_d) {
        std::vector<char> seen(field.values.size(), 0);
        for (std::size_t i = first_row; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto fields = split_fields(lines[i]);
            if (fields.size() != 3) fail(path, i + 1, "expected 3 fields");
            int x = parse_coordinate(fields[0], path, i + 1);
            int y = parse_coordinate(fields[1], path, i + 1);
            if (x >= field.width || y >= field.height)
                fail(path, i + 1, "coordinate outside the declared grid");
            std::size_t id = static_cast<std::size_t>(y) * field.width + x;
            if (seen[id]) fail(path, i + 1, "duplicate coordinate");
            seen[id] = 1;
            field.values[id] = parse_value(fields[2], path, i + 1);
        }
        for (std::size_t id = 0; id < seen.size(); ++id)
            if (!seen[id])
                throw ParseError(path + ": incomplete grid, missing (" +
                                 std::to_string(id % field.width) + "," +
                                 std::to_string(id / field.width) + ")");
    } else {
        std::vector<std::pair<int, double>> rows;
        for (std::size_t i = first_row; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto fields = split_fields(lines[i]);
            if (fields.size() != 2) fail(path, i + 1, "expected 2 fields");
            int x = parse_coordinate(fields[0], path, i + 1);
            rows.emplace_back(x, parse_value(fields[1], path, i + 1));
        }
        if (rows.empty()) throw ParseError(path + ": no field rows");
        field.values.assign(rows.size(), 0.0);
        std::vector<char> seen(rows.size(), 0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto [x, value] = rows[i];
            if (x >= static_cast<int>(rows.size()))
                throw ParseError(path + ": x=" + std::to_string(x) +
                                 " is outside 0.." + std::to_string(rows.size() - 1));
            if (seen[static_cast<std::size_t>(x)])
                throw ParseError(path + ": duplicate x=" + std::to_string(x));
            seen[static_cast<std::size_t>(x)] = 1;
            field.values[static_cast<std::size_t>(x)] = value;
        }
    }
    return field;
}

void write_field_file(const std::string& path, const FieldData& field) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    if (field.two_d) {
        out << "# width=" << field.width << " height=" << field.height << "\n";
        out << "x,y,value\n";
        for (int y = 0; y < field.height; ++y)
            for (int x = 0; x < field.width; ++x)
                out << x << ',' << y << ','
                    << format_double(field.values[static_cast<std::size_t>(y) * field.width + x])
                    << '\n';
    } else {
        out << "x,value\n";
        for (std::size_t x = 0; x < field.values.size(); ++x)
            out << x << ',' << format_double(field.values[x]) << '\n';
    }
    if (!out.good()) throw ParseError("failed while writing " + path);
}

void write_pgm(const std::string& path, const FieldData& field) {
    const int width = field.two_d ? field.width : field.size();
    const int height = field.two_d ? field.height : 1;

    double lo = field.values.front(), hi = field.values.front();
    for (double v : field.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double range = hi - lo;

    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << "P2\n" << width << ' ' << height << "\n255\n";
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            double v = field.values[static_cast<std::size_t>(y) * width + x];
            int gray = range > 0.0 ? static_cast<int>(std::lround((v - lo) / range * 255.0)) : 0;
            out << gray << (x + 1 == width ? '\n' : ' ');
        }
    }
    if (!out.good()) throw ParseError("failed while writing " + path);
}

}  // namespace gvfit::io
