#include "run_config.hpp"

#include "halfstrip/common.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace halfstrip::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string exact(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double to_double(const std::string& key, const std::string& v) {
    size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw ParameterError("config key '" + key + "': '" + v + "' is not a number");
    return x;
}

long long to_integer(const std::string& key, const std::string& v) {
    size_t used = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw ParameterError("config key '" + key + "': '" + v + "' is not an integer");
    return x;
}

}  // namespace

void RunConfig::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ParameterError("sigma must be a positive finite number");
    if (p && (!(*p > 0.0) || !std::isfinite(*p))) throw ParameterError("p must be a positive finite number");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw ParameterError("tolerances must be positive");
    if (J < 4 || J > 24) throw ParameterError("J must lie in [4, 24]");
    if (!format.empty() && format != "json" && format != "csv") throw ParameterError("format must be json or csv");
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.sigma == b.sigma && a.p == b.p && a.rel_tol == b.rel_tol && a.abs_tol == b.abs_tol && a.J == b.J &&
           a.seed == b.seed && a.output == b.output && a.format == b.format;
}

std::string to_text(const RunConfig& c) {
    std::ostringstream os;
    os << "sigma = " << exact(c.sigma) << "\n";
    if (c.p) os << "p = " << exact(*c.p) << "\n";
    os << "rel_tol = " << exact(c.rel_tol) << "\n";
    os << "abs_tol = " << exact(c.abs_tol) << "\n";
    os << "J = " << c.J << "\n";
    os << "seed = " << c.seed << "\n";
    if (!c.output.empty()) os << "output = " << c.output << "\n";
    if (!c.format.empty()) os << "format = " << c.format << "\n";
    return os.str();
}

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParameterError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "sigma") c.sigma = to_double(key, val);
        else if (key == "p") c.p = to_double(key, val);
        else if (key == "rel_tol") c.rel_tol = to_double(key, val);
        else if (key == "abs_tol") c.abs_tol = to_double(key, val);
        else if (key == "J") c.J = static_cast<int>(to_integer(key, val));
        else if (key == "seed") {
            const long long s = to_integer(key, val);
            if (s < 0) throw ParameterError("config key 'seed' must be non-negative");
            c.seed = static_cast<unsigned long long>(s);
        } else if (key == "output") c.output = val;
        else if (key == "format") c.format = val;
        else throw ParameterError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void save_config(const RunConfig& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot write config file '" + path + "'");
    out << to_text(c);
}

}  // namespace halfstrip::cli
