#pragma once

// Point-set text format: one "x,y" pair per line with decimal literals.
// Lines starting with '#' are comments; a "# label: <name>" comment labels
// the next point. Comments are ignored by the parser but can be written
// back, so labeled files round-trip byte-exactly.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "conespan/constructions.hpp"
#include "conespan/detail/format.hpp"
#include "conespan/geometry.hpp"

namespace conespan {

struct ParsedPointFile {
    PointSet points;
    std::map<int, std::string> labels;
};

inline ParsedPointFile parse_point_text(const std::string& text) {
    std::vector<std::pair<double, double>> xy;
    std::map<int, std::string> labels;
    std::string pending_label;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
            sv.remove_suffix(1);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            constexpr std::string_view tag = "# label:";
            if (sv.substr(0, tag.size()) == tag) {
                std::string_view name = sv.substr(tag.size());
                while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
                pending_label = std::string(name);
            }
            continue;
        }
        const std::size_t comma = sv.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("point file line " + std::to_string(lineno) +
                                        ": expected \"x,y\"");
        double x = 0.0, y = 0.0;
        if (!detail::parse_double(sv.substr(0, comma), x) ||
            !detail::parse_double(sv.substr(comma + 1), y))
            throw std::invalid_argument("point file line " + std::to_string(lineno) +
                                        ": bad coordinate");
        if (!pending_label.empty()) {
            labels[static_cast<int>(xy.size())] = pending_label;
            pending_label.clear();
        }
        xy.emplace_back(x, y);
    }
    return ParsedPointFile{PointSet::from_xy(xy), std::move(labels)};
}

inline ParsedPointFile read_point_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read point file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_point_text(buf.str());
}

inline std::string format_point_file(const PointSet& points,
                                     const std::map<int, std::string>& labels = {}) {
    std::string out;
    for (const Point& p : points) {
        auto it = labels.find(p.id);
        if (it != labels.end()) {
            out += "# label: ";
            out += it->second;
            out += '\n';
        }
        out += detail::format_double(p.x);
        out += ',';
        out += detail::format_double(p.y);
        out += '\n';
    }
    return out;
}

inline void write_point_file(const std::string& path, const PointSet& points,
                             const std::map<int, std::string>& labels = {}) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write point file: " + path);
    out << format_point_file(points, labels);
}

}  // namespace conespan
