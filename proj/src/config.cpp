#include "ordalib/config.hpp"

#include <fstream>
#include <sstream>

#include "ordalib/error.hpp"

namespace ordalib {

void RunConfig::validate() const {
  if (oracle_bounds.max_len <= 0 || oracle_bounds.max_depth <= 0 || oracle_bounds.max_states <= 0)
    fail(Err::OutOfRange, "oracle bounds must be positive");
  if (k <= 0 || max_product_len <= 0 || consequence_generations < 0 || consequence_max_len <= 0)
    fail(Err::OutOfRange, "search bounds must be positive");
  if (threads <= 0) fail(Err::OutOfRange, "parallelism degree must be positive");
  if (format != "text" && format != "json") fail(Err::OutOfRange, "format must be text or json");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto trim = [](std::string s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(Err::ParseError, "malformed section header: " + line);
      section = line.substr(1, line.size() - 2);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(Err::ParseError, "expected key = value: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);

    auto as_int = [&](const std::string& v) -> std::int64_t {
      try {
        return std::stoll(v);
      } catch (const std::exception&) {
        fail(Err::ParseError, "integer expected for " + key);
      }
    };

    std::string full = section.empty() ? key : section + "." + key;
    if (full == "oracle.backend") {
      cfg.oracle_backend = value;
    } else if (full == "oracle.max_len") {
      cfg.oracle_bounds.max_len = as_int(value);
    } else if (full == "oracle.max_depth") {
      cfg.oracle_bounds.max_depth = static_cast<int>(as_int(value));
    } else if (full == "oracle.max_states") {
      cfg.oracle_bounds.max_states = as_int(value);
    } else if (full == "search.k") {
      cfg.k = static_cast<int>(as_int(value));
    } else if (full == "search.max_product_len") {
      cfg.max_product_len = static_cast<int>(as_int(value));
    } else if (full == "search.consequence_generations") {
      cfg.consequence_generations = static_cast<int>(as_int(value));
    } else if (full == "search.consequence_max_len") {
      cfg.consequence_max_len = as_int(value);
    } else if (full == "search.ball_max_elements") {
      cfg.ball_max_elements = as_int(value);
    } else if (full == "output.format" || full == "format") {
      cfg.format = value;
    } else if (full == "run.threads" || full == "threads") {
      cfg.threads = static_cast<int>(as_int(value));
    } else if (full == "run.seed" || full == "seed") {
      cfg.seed = static_cast<std::uint64_t>(as_int(value));
    } else {
      fail(Err::ParseError, "unknown config key: " + full);
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace ordalib
