#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chom/graded_algebra.hpp"

namespace chom {

/// Parsed input document: a presentation plus computation caps.
struct AlgebraDocument {
    Presentation pres;
    int n_max = 4;
    int W = 6;
};

/// Loads and validates a document of the form
///   {"generators":[{"name":"x","weight":1}],
///    "relations":["x^2"],
///    "caps":{"max_degree":4,"max_weight":6}}
/// "relations" and "caps" are optional. Throws chom::Error subclasses on
/// malformed input (missing keys, bad weights, parse failures, inhomogeneous
/// relations).
AlgebraDocument load_algebra(const nlohmann::json& j);

struct RunOptions {
    int jobs = 1;
    std::string variant = "negative";  // cyclic only
    int ext_max = 10;                  // ext-ku only
};

struct RunResult {
    nlohmann::ordered_json output;
    int exit_code = 0;  // 0 = pass, 1 = mathematical mismatch
};

/// Runs one subcommand (hh, derham, hkr-check, derived-hkr-check, cyclic,
/// ext-ku, b-suite) and returns the structured report document
/// {version, algebra, command, caps, tables, findings}.
RunResult run(const std::string& command, const AlgebraDocument& doc, const RunOptions& opt);

/// Plain-text rendering of a report document: pipe tables plus findings.
std::string render_markdown(const nlohmann::ordered_json& output);

}  // namespace chom
