#include "halfstrip/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>

#include <doctest.h>

using nlohmann::json;

namespace {

// The subset of JSON Schema used by report.schema.json.
void validate(const json& v, const json& s, const std::string& at, std::vector<std::string>& errors) {
    auto fail = [&](const std::string& what) { errors.push_back(at + ": " + what); };
    if (s.contains("enum")) {
        bool found = false;
        for (const auto& e : s["enum"]) found = found || e == v;
        if (!found) fail("not in enum");
    }
    if (s.contains("type")) {
        const std::string t = s["type"];
        const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                        (t == "string" && v.is_string()) || (t == "integer" && v.is_number_integer()) ||
                        (t == "number" && v.is_number()) || (t == "boolean" && v.is_boolean());
        if (!ok) return fail("expected " + t);
    }
    if (v.is_number()) {
        const double x = v.get<double>();
        if (s.contains("minimum") && x < s["minimum"].get<double>()) fail("below minimum");
        if (s.contains("maximum") && x > s["maximum"].get<double>()) fail("above maximum");
        if (s.contains("exclusiveMinimum") && x <= s["exclusiveMinimum"].get<double>()) fail("not above exclusiveMinimum");
    }
    if (v.is_string()) {
        const std::string x = v;
        if (s.contains("minLength") && x.size() < s["minLength"].get<size_t>()) fail("too short");
        if (s.contains("pattern") && !std::regex_search(x, std::regex(s["pattern"].get<std::string>()))) fail("pattern");
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<size_t>()) fail("too few items");
        if (s.contains("items"))
            for (size_t k = 0; k < v.size(); ++k) validate(v[k], s["items"], at + "/" + std::to_string(k), errors);
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& key : s["required"])
                if (!v.contains(key.get<std::string>())) fail("missing " + key.get<std::string>());
        const json props = s.value("properties", json::object());
        for (const auto& [key, sub] : v.items()) {
            if (props.contains(key))
                validate(sub, props[key], at + "/" + key, errors);
            else if (s.value("additionalProperties", true) == false)
                fail("unexpected " + key);
        }
    }
}

std::vector<std::string> validate(const json& v, const json& s) {
    std::vector<std::string> errors;
    validate(v, s, "", errors);
    return errors;
}

json load_schema() {
    std::ifstream f(HALFSTRIP_SCHEMA_DIR "/report.schema.json");
    REQUIRE(f.good());
    return json::parse(f);
}

}  // namespace

TEST_CASE("the validator rejects malformed reports") {
    const json schema = load_schema();
    json r = json::parse(halfstrip::to_json(halfstrip::run_check("CHK-M2")));
    CHECK(validate(r, schema).empty());
    json bad = r;
    bad["verdict"] = "maybe";
    CHECK(validate(bad, schema).size() == 1);
    bad = r;
    bad.erase("tags");
    CHECK(validate(bad, schema).size() == 1);
    bad = r;
    bad["params"]["J"] = 2;
    CHECK(validate(bad, schema).size() == 1);
    bad = r;
    bad["extra"] = 1;
    CHECK(validate(bad, schema).size() == 1);
    bad = r;
    bad["check_id"] = "K1";
    CHECK(validate(bad, schema).size() == 1);
}

TEST_CASE("reports from several checks conform to the schema") {
    const json schema = load_schema();
    const halfstrip::RunSummary s = halfstrip::run_all({"blaschke", "kernel"}, {}, 2);
    REQUIRE(s.reports.size() >= 3);
    for (const auto& r : s.reports) {
        CAPTURE(r.check_id);
        const auto errors = validate(json::parse(halfstrip::to_json(r)), schema);
        for (const auto& e : errors) MESSAGE(e);
        CHECK(errors.empty());
    }
    halfstrip::CheckParams p;
    p.p = {1.5, 3.0};
    p.J = 6;
    CHECK(validate(json::parse(halfstrip::to_json(halfstrip::run_check("CHK-K2", p))), schema).empty());
}
