#include "options.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "exrobin/errors.hpp"

namespace exrobin::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("config: cannot open '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw validation_error("config: line " + std::to_string(lineno) +
                             " is not a key=value assignment");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw validation_error("config: line " + std::to_string(lineno) + " has an empty key");
    if (!out.emplace(key, value).second)
      throw validation_error("config: duplicate key '" + key + "' (line " +
                             std::to_string(lineno) + ")");
  }
  return out;
}

void ConfigBinder::bind(CLI::Option* opt, std::function<void(const std::string&)> setter) {
  entries_[opt->get_lnames().front()] = {opt, std::move(setter)};
}

void ConfigBinder::apply(const std::map<std::string, std::string>& config) const {
  for (const auto& [key, value] : config) {
    const auto it = entries_.find(key);
    if (it == entries_.end())
      throw validation_error("config: unknown key '" + key + "' for this subcommand");
    if (it->second.opt->count() > 0) continue;  // command line wins
    it->second.setter(value);
  }
}

double parse_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw validation_error("config: value for '" + key + "' is not a number: '" + value + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw validation_error("config: value for '" + key + "' is not an integer: '" + value + "'");
  return static_cast<int>(v);
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw validation_error("config: value for '" + key + "' is an empty list");
  return out;
}

}  // namespace exrobin::cli
