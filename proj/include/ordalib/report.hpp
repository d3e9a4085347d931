// Deterministic machine-readable output: JSON serialization of core types,
// batch reports and an order-preserving parallel map.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordalib/decide.hpp"
#include "ordalib/knot.hpp"
#include "ordalib/word.hpp"

namespace ordalib {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "ordalib/1";

Json word_to_json(const Word& w);
Word word_from_json(const Json& j, const AlphabetPtr& alpha);

Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json certificate_to_json(const RewriteCertificate& cert);
RewriteCertificate certificate_from_json(const Json& j, const AlphabetPtr& alpha);

Json nonlo_cases_to_json(const std::vector<Word>& X, const std::vector<NonLOCase>& cases);

// Knot table rows: {name, braid?, strands?, polynomial?, fibred?, two_bridge?, twist_m?}
KnotInput knot_input_from_json(const Json& j);
std::vector<KnotInput> load_knot_table(const std::string& path);  // JSON lines

// results -> bytes; identical bytes for identical inputs regardless of the
// parallelism used to produce them.
std::string emit_report(const std::vector<Json>& results, const std::string& format);

// Applies fn to 0..n-1 with at most `threads` workers; results in input order.
std::vector<Json> run_parallel(int n, int threads, const std::function<Json(int)>& fn);

}  // namespace ordalib
