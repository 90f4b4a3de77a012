#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exrobin/verifier.hpp"
#include "json.hpp"

namespace exrobin::cli {

using ordered_json = nlohmann::ordered_json;

// Wire format version for JSON documents and the CSV schema line.
inline constexpr const char* schema_version = "exrobin/1";

// Every floating-point field passes through here: rounded to `precision`
// significant digits so repeated runs serialize byte-identically.
ordered_json num(double v, int precision);

// {schema_version, command, config, ...} document shell.
ordered_json document(const std::string& command, ordered_json config);

ordered_json report_to_json(const verify::VerificationReport& report, int precision);

struct SweepRow {
  double alpha;
  double radius;
  double lambda;
  std::optional<double> nu;
  std::string kind;
};

// CSV with '#'-prefixed metadata (schema line, resolved config) before the
// header row `alpha,R,lambda,nu,kind`; nu is empty for essential rows.
std::string sweep_csv(const std::vector<SweepRow>& rows, const ordered_json& config,
                      int precision);

ordered_json sweep_rows_json(const std::vector<SweepRow>& rows, int precision);

// Serialize with two-space indentation and a trailing newline.
std::string dump(const ordered_json& doc);

// Write to the path, or to stdout when the path is empty.
void write_output(const std::string& out_path, const std::string& payload);

}  // namespace exrobin::cli
