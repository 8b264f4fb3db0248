#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/parse.hpp"
#include "darboux/search.hpp"

namespace darboux {

/// Raised on malformed input files; line is 1-based, offset is the 0-based
/// byte offset within that line.
struct FileParseError : std::runtime_error {
    int line;
    size_t offset;
    FileParseError(std::string msg, int line_, size_t offset_)
        : std::runtime_error(std::move(msg)), line(line_), offset(offset_) {}
};

/// Line-based input: `key = expression`, one statement per line, `#`
/// comments. Keys: P, Q, f (repeatable), max_degree, bound_rule, shear_seed.
struct SystemFile {
    std::optional<BiPoly> P, Q;
    std::vector<BiPoly> curves;
    std::optional<int> max_degree;
    std::optional<BoundRule> bound_rule;
    std::optional<int> shear_seed;
    std::string path;
};

inline BoundRule parse_bound_rule(const std::string& s) {
    if (s == "smooth") return BoundRule::smooth();
    if (s == "nodal") return BoundRule::nodal();
    if (s.rfind("k:", 0) == 0) {
        int k = std::stoi(s.substr(2));
        return BoundRule::k_bounded(k);
    }
    if (s.rfind("explicit:", 0) == 0) {
        int n = std::stoi(s.substr(9));
        return BoundRule::explicit_n(n);
    }
    throw ValidationError("unknown bound rule '" + s + "' (smooth|nodal|k:<K>|explicit:<n>)");
}

inline SystemFile parse_system_text(const std::string& text, const std::string& path = "<string>") {
    SystemFile out;
    out.path = path;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        size_t eq = line.find('=');
        if (eq == std::string::npos || eq < b)
            throw FileParseError("expected 'key = expression'", lineno, b);
        std::string key = line.substr(b, eq - b);
        key.erase(key.find_last_not_of(" \t") + 1);
        size_t vstart = line.find_first_not_of(" \t", eq + 1);
        if (vstart == std::string::npos || vstart > e)
            throw FileParseError("missing value after '='", lineno, eq + 1);
        std::string value = line.substr(vstart, e - vstart + 1);

        auto parse_expr = [&](const std::string& v) {
            try {
                return parse_poly(v);
            } catch (const ParseError& pe) {
                throw FileParseError(pe.what(), lineno, vstart + pe.offset);
            }
        };
        if (key == "P") {
            if (out.P) throw ValidationError("duplicate P definition (line " + std::to_string(lineno) + ")");
            out.P = parse_expr(value);
        } else if (key == "Q") {
            if (out.Q) throw ValidationError("duplicate Q definition (line " + std::to_string(lineno) + ")");
            out.Q = parse_expr(value);
        } else if (key == "f") {
            out.curves.push_back(parse_expr(value));
        } else if (key == "max_degree") {
            if (out.max_degree) throw ValidationError("duplicate max_degree");
            try {
                out.max_degree = std::stoi(value);
            } catch (...) {
                throw FileParseError("max_degree must be an integer", lineno, vstart);
            }
        } else if (key == "bound_rule") {
            if (out.bound_rule) throw ValidationError("duplicate bound_rule");
            out.bound_rule = parse_bound_rule(value);
        } else if (key == "shear_seed") {
            if (out.shear_seed) throw ValidationError("duplicate shear_seed");
            try {
                out.shear_seed = std::stoi(value);
            } catch (...) {
                throw FileParseError("shear_seed must be an integer", lineno, vstart);
            }
        } else {
            throw FileParseError("unknown key '" + key + "'", lineno, b);
        }
    }
    return out;
}

inline SystemFile parse_system_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system_text(ss.str(), path);
}

} // namespace darboux
