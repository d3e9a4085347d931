#include "ordalib/report.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "ordalib/error.hpp"

namespace ordalib {

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const auto& s : w.syllables()) {
    const GeneratorId& g = w.alphabet()->gen(s.gen);
    Json entry = Json::array();
    entry.push_back(g.name);
    if (g.index) entry.push_back(Json::array({g.index->first, g.index->second}));
    entry.push_back(s.exp);
    out.push_back(entry);
  }
  return out;
}

Word word_from_json(const Json& j, const AlphabetPtr& alpha) {
  Word w = Word::identity(alpha);
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() < 2) fail(Err::ParseError, "malformed word entry");
    GeneratorId g;
    g.name = entry[0].get<std::string>();
    std::int64_t exp;
    if (entry.size() == 3) {
      g.index = std::make_pair(entry[1][0].get<int>(), entry[1][1].get<int>());
      exp = entry[2].get<std::int64_t>();
    } else {
      exp = entry[1].get<std::int64_t>();
    }
    int idx = alpha->find(g);
    if (idx < 0) fail(Err::UnknownGenerator, "unknown generator " + g.str());
    w = w * Word::generator(alpha, idx, exp);
  }
  return w;
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  std::vector<Int> cs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      cs.emplace_back(c.get<long long>());
    } else {
      cs.emplace_back(Int(c.get<std::string>()));
    }
  }
  return IntPolynomial(std::move(cs));
}

Json certificate_to_json(const RewriteCertificate& cert) {
  Json out = Json::array();
  for (const auto& f : cert) {
    Json entry;
    entry["conjugator"] = f.conjugator.format();
    entry["relator"] = f.relator;
    entry["sign"] = f.sign;
    out.push_back(entry);
  }
  return out;
}

RewriteCertificate certificate_from_json(const Json& j, const AlphabetPtr& alpha) {
  RewriteCertificate cert;
  for (const auto& entry : j) {
    RelatorFactor f;
    f.conjugator = Word::parse(entry.at("conjugator").get<std::string>(), alpha);
    f.relator = entry.at("relator").get<int>();
    f.sign = entry.at("sign").get<int>();
    cert.push_back(std::move(f));
  }
  return cert;
}

Json nonlo_cases_to_json(const std::vector<Word>& X, const std::vector<NonLOCase>& cases) {
  Json out;
  out["schema"] = kSchemaVersion;
  Json xs = Json::array();
  for (const auto& x : X) xs.push_back(x.format());
  out["words"] = xs;
  Json cs = Json::array();
  for (const auto& c : cases) {
    Json jc;
    jc["signs"] = c.signs;
    jc["witness"] = c.witness;
    if (c.certificate) jc["certificate"] = certificate_to_json(*c.certificate);
    cs.push_back(jc);
  }
  out["cases"] = cs;
  return out;
}

KnotInput knot_input_from_json(const Json& j) {
  KnotInput k;
  k.name = j.at("name").get<std::string>();
  if (j.contains("braid")) {
    int strands = j.at("strands").get<int>();
    k.braid = BraidWord::parse(j.at("braid").get<std::string>(), strands);
  }
  if (j.contains("polynomial")) k.polynomial = polynomial_from_json(j.at("polynomial"));
  if (j.contains("fibred")) k.fibred = j.at("fibred").get<bool>();
  if (j.contains("two_bridge"))
    k.two_bridge = std::make_pair(j.at("two_bridge")[0].get<int>(), j.at("two_bridge")[1].get<int>());
  if (j.contains("twist_m")) k.twist_m = j.at("twist_m").get<int>();
  return k;
}

std::vector<KnotInput> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open knot table: " + path);
  std::vector<KnotInput> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') trimmed.push_back(c);
    if (trimmed.empty()) continue;
    out.push_back(knot_input_from_json(Json::parse(line)));
  }
  return out;
}

std::string emit_report(const std::vector<Json>& results, const std::string& format) {
  if (format == "json") {
    Json out;
    out["schema"] = kSchemaVersion;
    out["results"] = results;
    return out.dump(2) + "\n";
  }
  // Aligned text table over the union of scalar keys, insertion order.
  std::vector<std::string> keys;
  for (const auto& r : results)
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) continue;
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) keys.push_back(it.key());
    }
  auto cell = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    width[i] = keys[i].size();
    for (const auto& r : results)
      if (r.contains(keys[i])) width[i] = std::max(width[i], cell(r.at(keys[i])).size());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    os << keys[i] << std::string(width[i] - keys[i].size() + 2, ' ');
  }
  os << '\n';
  for (const auto& r : results) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::string c = r.contains(keys[i]) ? cell(r.at(keys[i])) : "-";
      os << c << std::string(width[i] - c.size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

std::vector<Json> run_parallel(int n, int threads, const std::function<Json(int)>& fn) {
  std::vector<Json> results(static_cast<std::size_t>(n));
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(threads, n);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        results[static_cast<std::size_t>(i)] = fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace ordalib
