#include "crmin/specfile.hpp"

#include <fstream>
#include <sstream>

#include "crmin/errors.hpp"

namespace crmin {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int parse_positive_int(const std::string& value, std::size_t pos, const std::string& key) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size() || v < 1) throw std::invalid_argument("range");
        return v;
    } catch (...) {
        throw ParseError(pos, "value of '" + key + "' must be a positive integer, got '" +
                                  value + "'");
    }
}

} // namespace

SpecFile parse_spec_text(const std::string& text) {
    SpecFile spec;
    spec.raw = text;
    std::istringstream in(text);
    std::string line;
    std::size_t offset = 0;
    bool saw_m = false, saw_d = false, saw_order = false;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string body = trim(line);
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_start, "expected 'key = value', got '" + body + "'");
        std::string key = trim(body.substr(0, eq));
        std::string value = trim(body.substr(eq + 1));
        if (value.empty())
            throw ParseError(line_start, "missing value for key '" + key + "'");
        if (key == "m") {
            if (saw_m) throw ParseError(line_start, "duplicate key 'm'");
            spec.m = parse_positive_int(value, line_start, key);
            saw_m = true;
        } else if (key == "d") {
            if (saw_d) throw ParseError(line_start, "duplicate key 'd'");
            spec.d = parse_positive_int(value, line_start, key);
            saw_d = true;
        } else if (key == "order") {
            if (saw_order) throw ParseError(line_start, "duplicate key 'order'");
            spec.order = parse_positive_int(value, line_start, key);
            saw_order = true;
        } else if (key == "theta") {
            spec.theta_exprs.push_back(value);
        } else if (key == "f") {
            if (spec.f_expr) throw ParseError(line_start, "duplicate key 'f'");
            spec.f_expr = value;
        } else if (key == "g") {
            if (spec.g_expr) throw ParseError(line_start, "duplicate key 'g'");
            spec.g_expr = value;
        } else {
            throw ParseError(line_start, "unknown key '" + key + "'");
        }
    }
    if (!saw_m) throw ParseError(text.size(), "missing key 'm'");
    if (!saw_d) throw ParseError(text.size(), "missing key 'd'");
    if (!saw_order) throw ParseError(text.size(), "missing key 'order'");
    if (spec.theta_exprs.empty()) throw ParseError(text.size(), "missing key 'theta'");
    if (static_cast<int>(spec.theta_exprs.size()) != spec.d)
        throw ParseError(text.size(),
                         "expected " + std::to_string(spec.d) + " 'theta' lines, got " +
                             std::to_string(spec.theta_exprs.size()));
    return spec;
}

SpecFile load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

} // namespace crmin
