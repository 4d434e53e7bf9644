#pragma once

#include "halfstrip/common.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace halfstrip {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct CheckParams {
    double sigma = 1.0;
    std::vector<double> p;  // empty: the check's own sweep
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int J = 8;  // grid depth for H^p estimates
    unsigned long long seed = 1729;
    bool timing = false;  // record wall time (otherwise runtime_ms = 0 for reproducible output)

    void validate() const;
};

using ParamValue = std::variant<double, long long, std::string, std::vector<double>>;

struct VerificationReport {
    std::string check_id;
    std::string paper_ref;
    std::vector<std::string> tags;
    std::vector<std::pair<std::string, ParamValue>> params;
    long long samples = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    double error_estimate = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    double runtime_ms = 0.0;
    std::string detail;
};

struct CheckInfo {
    std::string id;
    std::string title;
    std::string paper_ref;
    std::vector<std::string> tags;
};

// Sorted by id.
const std::vector<CheckInfo>& registry();
// id -> statement anchor; every report's paper_ref is one of these values.
const std::map<std::string, std::string>& reference_map();

// Throws LookupError for an unknown id and ParameterError for invalid parameters.
VerificationReport run_check(const std::string& check_id, const CheckParams& params = {});

struct RunSummary {
    std::vector<VerificationReport> reports;  // ordered by check_id
    int pass = 0;
    int fail = 0;
    int inconclusive = 0;
};

// Runs checks carrying any of `tags` (all when empty) on up to `threads` workers.
RunSummary run_all(const std::set<std::string>& tags = {}, const CheckParams& params = {}, int threads = 1);

// Effective worker count: HALFSTRIP_THREADS overrides `requested`; result is at least 1.
int thread_cap(int requested);

std::string to_json(const VerificationReport& r);
std::string to_json(const RunSummary& s);

}  // namespace halfstrip
