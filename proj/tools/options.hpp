#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace CLI {
class Option;
}

namespace exrobin::cli {

// Flat key=value configuration file: one assignment per line, '#' starts a
// comment, blank lines are ignored. Keys are the long option names without
// the leading dashes. Values given on the command line override the file.
std::map<std::string, std::string> load_config_file(const std::string& path);

// Connects config keys to already-declared CLI options so a file can fill in
// whatever the command line left unset.
class ConfigBinder {
 public:
  void bind(CLI::Option* opt, std::function<void(const std::string&)> setter);
  // Unknown keys and unparsable values raise validation_error.
  void apply(const std::map<std::string, std::string>& config) const;

 private:
  struct Entry {
    CLI::Option* opt;
    std::function<void(const std::string&)> setter;
  };
  std::map<std::string, Entry> entries_;
};

// Strict scalar parsers for config values; `key` names the offender in errors.
double parse_double(const std::string& key, const std::string& value);
int parse_int(const std::string& key, const std::string& value);
std::vector<double> parse_double_list(const std::string& key, const std::string& value);

}  // namespace exrobin::cli
