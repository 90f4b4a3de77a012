#include "emit.hpp"

#include <cstdio>
#include <fstream>

#include "exrobin/errors.hpp"
#include "exrobin/format.hpp"

namespace exrobin::cli {

ordered_json num(double v, int precision) { return format::round_sig(v, precision); }

ordered_json document(const std::string& command, ordered_json config) {
  ordered_json doc;
  doc["schema_version"] = schema_version;
  doc["command"] = command;
  doc["config"] = std::move(config);
  return doc;
}

ordered_json report_to_json(const verify::VerificationReport& report, int precision) {
  ordered_json j;
  j["check_name"] = report.check_name;
  ordered_json inputs = ordered_json::object();
  for (const auto& [key, value] : report.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  j["tolerance"] = num(report.tolerance, precision);
  ordered_json outcomes = ordered_json::array();
  for (const auto& o : report.outcomes) {
    ordered_json oj;
    oj["point"] = o.point;
    oj["lhs"] = num(o.lhs, precision);
    oj["rhs"] = num(o.rhs, precision);
    oj["margin"] = num(o.margin, precision);
    oj["pass"] = o.pass;
    outcomes.push_back(std::move(oj));
  }
  j["outcomes"] = std::move(outcomes);
  j["pass"] = report.pass;
  j["worst_margin"] = num(report.worst_margin, precision);
  return j;
}

namespace {

std::string config_line(const ordered_json& config) {
  std::string line = "# config";
  for (const auto& [key, value] : config.items()) {
    line += " " + key + "=";
    line += value.is_string() ? value.get<std::string>() : value.dump();
  }
  return line;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows, const ordered_json& config,
                      int precision) {
  std::string out = "# schema=";
  out += schema_version;
  out += "\n";
  out += config_line(config);
  out += "\nalpha,R,lambda,nu,kind\n";
  for (const auto& row : rows) {
    out += format::format_double(row.alpha, precision) + ",";
    out += format::format_double(row.radius, precision) + ",";
    out += format::format_double(row.lambda, precision) + ",";
    if (row.nu) out += format::format_double(*row.nu, precision);
    out += "," + row.kind + "\n";
  }
  return out;
}

ordered_json sweep_rows_json(const std::vector<SweepRow>& rows, int precision) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j;
    j["alpha"] = num(row.alpha, precision);
    j["R"] = num(row.radius, precision);
    j["lambda"] = num(row.lambda, precision);
    if (row.nu)
      j["nu"] = num(*row.nu, precision);
    else
      j["nu"] = nullptr;
    j["kind"] = row.kind;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw validation_error("output: cannot open '" + out_path + "' for writing");
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw validation_error("output: failed writing '" + out_path + "'");
}

}  // namespace exrobin::cli
