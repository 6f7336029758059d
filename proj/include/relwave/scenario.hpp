#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relwave/constants.hpp"
#include "relwave/errors.hpp"

namespace relwave::scenario {

using relwave::IoError;
using relwave::ParseError;
using relwave::ValidationError;

/// One parsed scenario: a kind plus its key/value parameters. raw_text keeps
/// the file bytes so result metadata can echo the input verbatim.
struct Scenario {
    std::string kind;
    std::map<std::string, std::string> parameters;
    std::string output_path;  ///< optional "out" key
    std::uint64_t seed = 0;
    std::string raw_text;
    std::string source;
};

/// Parses the line-oriented key = value format. '#' lines and blank lines
/// are skipped; the "kind" key is required; duplicate keys are rejected.
Scenario parse_scenario(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& source_name);

/// A table cell: a finite number or the tagged unbounded sentinel, which
/// serializes as the string "inf".
struct Value {
    double number = 0.0;
    bool is_infinite = false;

    static Value num(double v) { return {v, false}; }
    static Value infinite() { return {0.0, true}; }
};

struct Column {
    std::string name;
    std::string unit;
};

struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<Value>> rows;
    std::map<std::string, std::string> metadata;
};

/// The recognised scenario kinds, sorted.
std::vector<std::string> known_kinds();

/// Required and optional parameter names for a kind (for list-kinds and
/// documentation). Throws ValidationError for an unknown kind.
struct KindSpec {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};
KindSpec kind_spec(const std::string& kind);

/// Full parameter validation for the scenario's kind: unknown keys are
/// rejected by name, required keys must be present, and every value must be
/// in-domain. Does not run any computation.
void validate_scenario(const Scenario& s, const PhysicalConstants& k);

/// Validates, dispatches to the computational modules and assembles the
/// result. Output is deterministic given (scenario, seed, artifact version).
ResultTable run_scenario(const Scenario& s, const PhysicalConstants& k);

enum class OutputFormat { csv, json };

std::string render(const ResultTable& table, OutputFormat format);

/// Renders and writes; throws IoError when the path cannot be opened.
void emit(const ResultTable& table, OutputFormat format, const std::string& path);

/// Re-reads rows from a JSON render (serialization round-trip helper).
std::vector<std::vector<Value>> parse_json_rows(const std::string& json_text);

}  // namespace relwave::scenario
