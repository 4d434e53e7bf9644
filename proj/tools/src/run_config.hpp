#pragma once

#include <optional>
#include <string>

namespace halfstrip::cli {

struct RunConfig {
    double sigma = 1.0;
    std::optional<double> p;  // unset: each command picks its own default
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int J = 8;
    unsigned long long seed = 1729;
    std::string output;  // empty: stdout
    std::string format;  // "json", "csv", or empty for the command default

    void validate() const;
};

bool operator==(const RunConfig& a, const RunConfig& b);

// key = value lines; '#' starts a comment. Keys are exactly the field names.
std::string to_text(const RunConfig& c);
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
void save_config(const RunConfig& c, const std::string& path);

}  // namespace halfstrip::cli
