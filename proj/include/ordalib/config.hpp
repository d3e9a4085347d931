// Run configuration: oracle and search bounds, output format, parallelism and
// seed.  Loaded from a small TOML subset (sections, key = value).
#pragma once

#include <cstdint>
#include <string>

#include "ordalib/oracle.hpp"

namespace ordalib {

struct RunConfig {
  RewriteBounds oracle_bounds;
  std::string oracle_backend = "auto";  // auto|free|abelian|klein|affine|braid|bounded

  int k = 4;                       // ball radius
  int max_product_len = 8;         // semigroup sign test depth
  int consequence_generations = 2; // find_blockers search depth
  std::int64_t consequence_max_len = 12;
  std::int64_t ball_max_elements = 20000;

  std::string format = "text";  // text|json
  int threads = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

// Parses `[section]` headers and `key = value` lines; values are integers,
// booleans or (possibly quoted) strings.  `#` starts a comment.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text);

}  // namespace ordalib
