// ordalib: computations with orderable groups.  Subcommands cover free-group
// series orderings, braid orderings, knot verdicts, presentation analysis,
// non-left-orderability certificates and Archimedean orderings of Z^n.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "ordalib/archimedean.hpp"
#include "ordalib/braid.hpp"
#include "ordalib/config.hpp"
#include "ordalib/decide.hpp"
#include "ordalib/knot.hpp"
#include "ordalib/magnus.hpp"
#include "ordalib/report.hpp"

namespace ord = ordalib;
using ord::Json;

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitUndetermined = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Output {
  std::string format = "text";
  int exit_code = kExitVerdict;
  std::vector<Json> rows;

  void emit() const { std::cout << ord::emit_report(rows, format); }
};

std::string cmp_str(ord::Cmp c) {
  switch (c) {
    case ord::Cmp::Less:
      return "Less";
    case ord::Cmp::Equal:
      return "Equal";
    case ord::Cmp::Greater:
      return "Greater";
  }
  return "?";
}

ord::ZVec parse_zvec(const std::string& text) {
  ord::ZVec out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) out.push_back(std::stoll(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

ord::Presentation presentation_for(const std::string& name_or_text) {
  if (name_or_text.find("gens:") != std::string::npos)
    return ord::Presentation::parse(name_or_text);
  return ord::catalog_lookup(name_or_text).presentation;
}

Json ball_to_json(const ord::Ball& ball) {
  Json out;
  out["radius"] = ball.radius;
  Json elems = Json::array();
  for (const auto& e : ball.elements) elems.push_back(e.format());
  out["elements"] = elems;
  out["inverse"] = ball.inverse;
  out["table"] = ball.table;
  return out;
}

// --- group nonlo ------------------------------------------------------------

int run_nonlo(const std::string& name, const std::string& method, const ord::RunConfig& cfg,
              const std::string& cert_path, Output& out) {
  const auto& entry = ord::catalog_lookup(name);
  Json result;
  result["group"] = name;
  result["method"] = method;
  Json cert;
  cert["schema"] = ord::kSchemaVersion;
  cert["group"] = name;
  cert["method"] = method;

  bool refuted = false;
  if (method == "partitions") {
    ord::Oracle oracle = ord::oracle_for(entry, cfg.oracle_bounds);
    ord::Ball ball = oracle.ball(cfg.k, cfg.ball_max_elements);
    auto parts = ord::enumerate_k_partitions(ball);
    refuted = parts.empty();
    result["k"] = cfg.k;
    result["partitions"] = parts.size();
    cert["k"] = cfg.k;
    cert["ball"] = ball_to_json(ball);
  } else if (method == "signs") {
    ord::Oracle oracle = ord::oracle_for(entry, cfg.oracle_bounds);
    std::vector<ord::Word> X = entry.sign_test_words;
    if (X.empty()) {
      for (int g = 0; g < entry.presentation.generator_count(); ++g)
        X.push_back(ord::Word::generator(entry.presentation.alphabet(), g));
    }
    auto r = ord::semigroup_sign_test(oracle, X, cfg.max_product_len, entry.hints,
                                      &entry.presentation);
    refuted = r.refuted;
    result["cases"] = r.cases.size();
    if (refuted) cert.update(ord::nonlo_cases_to_json(X, r.cases));
  } else if (method == "complete") {
    auto r = ord::find_blockers(entry.presentation, cfg.consequence_generations,
                                cfg.consequence_max_len, 5000);
    refuted = r.complete;
    result["generation"] = r.generation;
    if (refuted) {
      cert["generation"] = r.generation;
      Json words = Json::array();
      for (const auto& w : r.detail.words) words.push_back(w.format());
      cert["words"] = words;
      Json assigns = Json::array();
      for (const auto& [signs, idx] : r.detail.blocker_map) {
        Json a;
        a["signs"] = signs;
        a["blocker"] = idx;
        assigns.push_back(a);
      }
      cert["assignments"] = assigns;
      // Triviality certificates for the non-relator words.
      auto cons = r.generation > 0
                      ? ord::consequences(entry.presentation, cfg.consequence_max_len, 5000,
                                          r.generation - 1)
                      : std::vector<ord::Consequence>{};
      Json jcons = Json::array();
      for (const auto& c : cons) {
        Json jc;
        jc["word"] = c.word.format();
        jc["certificate"] = ord::certificate_to_json(c.certificate);
        jcons.push_back(jc);
      }
      cert["consequences"] = jcons;
    }
  } else {
    std::cerr << "unknown method: " << method << "\n";
    return kExitUsage;
  }

  result["verdict"] = refuted ? "NonLeftOrderable" : "Undetermined";
  out.rows.push_back(result);
  if (refuted && !cert_path.empty()) {
    std::ofstream f(cert_path);
    f << cert.dump(2) << "\n";
  }
  return refuted ? kExitVerdict : kExitUndetermined;
}

// --- verify-cert --------------------------------------------------------------

int run_verify_cert(const std::string& path, const ord::RunConfig& cfg, Output& out) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open certificate: " << path << "\n";
    return kExitUsage;
  }
  Json cert = Json::parse(f);
  const std::string group = cert.at("group").get<std::string>();
  const std::string method = cert.at("method").get<std::string>();
  const auto& entry = ord::catalog_lookup(group);
  bool ok = false;

  if (method == "signs") {
    ord::Oracle oracle = ord::oracle_for(entry, cfg.oracle_bounds);
    std::vector<ord::Word> X;
    for (const auto& xw : cert.at("words"))
      X.push_back(ord::Word::parse(xw.get<std::string>(), entry.presentation.alphabet()));
    ok = !cert.at("cases").empty();
    std::size_t expected_cases = 1u << X.size();
    if (cert.at("cases").size() != expected_cases) ok = false;
    for (const auto& jc : cert.at("cases")) {
      ord::NonLOCase c;
      for (const auto& s : jc.at("signs")) c.signs.push_back(s.get<int>());
      for (const auto& w : jc.at("witness")) c.witness.push_back(w.get<int>());
      if (jc.contains("certificate"))
        c.certificate = ord::certificate_from_json(jc.at("certificate"),
                                                   entry.presentation.alphabet());
      ok = ok && ord::replay_nonlo_case(oracle, X, c, &entry.presentation);
    }
  } else if (method == "complete") {
    std::vector<ord::Word> words;
    for (const auto& w : cert.at("words"))
      words.push_back(ord::Word::parse(w.get<std::string>(), entry.presentation.alphabet()));
    ok = true;
    // Non-relator words must carry valid triviality certificates.
    std::map<std::string, bool> certified;
    for (const auto& jc : cert.at("consequences")) {
      ord::Word w = ord::Word::parse(jc.at("word").get<std::string>(),
                                     entry.presentation.alphabet());
      auto rc = ord::certificate_from_json(jc.at("certificate"), entry.presentation.alphabet());
      if (!ord::replay_certificate(entry.presentation, w, rc)) ok = false;
      certified[w.key()] = true;
    }
    const auto& rels = entry.presentation.relators();
    for (std::size_t i = rels.size(); i < words.size(); ++i)
      if (!certified.count(words[i].key())) ok = false;
    for (std::size_t i = 0; i < rels.size() && i < words.size(); ++i)
      if (!(words[i] == rels[i])) ok = false;
    // Blocking coverage over all sign assignments.
    const int n = entry.presentation.generator_count();
    std::set<std::vector<int>> covered;
    for (const auto& a : cert.at("assignments")) {
      std::vector<int> signs;
      for (const auto& s : a.at("signs")) signs.push_back(s.get<int>());
      int idx = a.at("blocker").get<int>();
      if (idx < 0 || idx >= static_cast<int>(words.size()) ||
          !ord::blocks(words[static_cast<std::size_t>(idx)], signs)) {
        ok = false;
      } else {
        covered.insert(signs);
      }
    }
    if (covered.size() != (1u << n)) ok = false;
  } else if (method == "partitions") {
    // Recompute the ball from the oracle and re-run the enumeration.
    ord::Oracle oracle = ord::oracle_for(entry, cfg.oracle_bounds);
    int k = cert.at("k").get<int>();
    ord::Ball ball = oracle.ball(k, cfg.ball_max_elements);
    const auto& jball = cert.at("ball");
    ok = static_cast<int>(jball.at("elements").size()) == static_cast<int>(ball.elements.size());
    for (std::size_t i = 0; ok && i < ball.elements.size(); ++i)
      ok = jball.at("elements")[i].get<std::string>() == ball.elements[i].format();
    ok = ok && ord::enumerate_k_partitions(ball).empty();
  } else {
    std::cerr << "unknown certificate method: " << method << "\n";
    return kExitUsage;
  }

  Json result;
  result["certificate"] = path;
  result["group"] = group;
  result["method"] = method;
  result["verified"] = ok;
  out.rows.push_back(result);
  return ok ? kExitVerdict : kExitGuard;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordalib: computations with orderable groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string format;
  int threads = 0;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "TOML configuration file");
  app.add_option("--format", format, "output format: text|json");
  app.add_option("--threads", threads, "parallelism degree");
  app.add_option("--seed", seed, "seed for randomized batch operations");

  // order compare-free
  auto* order_cmd = app.add_subcommand("order", "free-group series ordering");
  auto* cmp_cmd = order_cmd->add_subcommand("compare-free", "compare two free-group words");
  std::string cmp_u, cmp_v, cmp_gens = "x1 x2";
  cmp_cmd->add_option("u", cmp_u)->required();
  cmp_cmd->add_option("v", cmp_v)->required();
  cmp_cmd->add_option("--gens", cmp_gens, "generator names, subscript order");

  // braid <op>
  auto* braid_cmd = app.add_subcommand("braid", "braid group computations");
  int strands = 3;
  std::string braid_w1, braid_w2;
  std::string braid_op;
  for (const char* op : {"sign", "compare", "floor", "prime", "genus", "alexander"}) {
    auto* sub = braid_cmd->add_subcommand(op);
    sub->add_option("--strands", strands, "strand count")->required();
    sub->add_option("word", braid_w1)->required();
    if (std::string(op) == "compare") sub->add_option("word2", braid_w2)->required();
    sub->callback([&braid_op, op]() { braid_op = op; });
  }

  // knot verdict
  auto* knot_cmd = app.add_subcommand("knot", "knot orderability verdicts");
  auto* verdict_cmd = knot_cmd->add_subcommand("verdict", "verdict table");
  std::string table_path;
  verdict_cmd->add_option("--table", table_path, "JSON-lines knot table")->required();

  // group <op>
  auto* group_cmd = app.add_subcommand("group", "presentation analysis");
  std::string group_name, nonlo_method = "signs", cert_path;
  int group_k = 0, group_gens = -1;
  long long max_cosets = 100000;
  bool count_only = false, conradian = false;
  auto* ab_cmd = group_cmd->add_subcommand("abelianize");
  ab_cmd->add_option("name", group_name)->required();
  auto* order_g_cmd = group_cmd->add_subcommand("order");
  order_g_cmd->add_option("name", group_name)->required();
  order_g_cmd->add_option("--max-cosets", max_cosets);
  auto* cat_cmd = group_cmd->add_subcommand("catalog");
  cat_cmd->add_option("name", group_name);
  auto* nonlo_cmd = group_cmd->add_subcommand("nonlo");
  nonlo_cmd->add_option("name", group_name)->required();
  nonlo_cmd->add_option("--method", nonlo_method, "partitions|signs|complete");
  nonlo_cmd->add_option("--k", group_k, "ball radius");
  nonlo_cmd->add_option("--cert", cert_path, "write the certificate here");
  auto* kpart_cmd = group_cmd->add_subcommand("kpartitions");
  kpart_cmd->add_option("name", group_name)->required();
  kpart_cmd->add_option("--k", group_k);
  kpart_cmd->add_flag("--count-only", count_only);
  kpart_cmd->add_flag("--conradian", conradian);
  auto* complete_cmd = group_cmd->add_subcommand("complete");
  complete_cmd->add_option("name", group_name)->required();
  complete_cmd->add_option("--generations", group_gens);

  // zn
  auto* zn_cmd = app.add_subcommand("zn", "orderings of Z^n");
  std::string zn_v, zn_tiebreak, zn_m, zn_n, zn_f, zn_g;
  int zn_k = 20;
  auto* zn_cmp = zn_cmd->add_subcommand("compare");
  zn_cmp->add_option("--v", zn_v)->required();
  zn_cmp->add_option("--tiebreak", zn_tiebreak);
  zn_cmp->add_option("--m", zn_m)->required();
  zn_cmp->add_option("--n", zn_n)->required();
  auto* zn_h = zn_cmd->add_subcommand("holder");
  zn_h->add_option("--v", zn_v)->required();
  zn_h->add_option("--tiebreak", zn_tiebreak);
  zn_h->add_option("--f", zn_f)->required();
  zn_h->add_option("--g", zn_g)->required();
  zn_h->add_option("--k", zn_k);

  // verify-cert
  auto* verify_cmd = app.add_subcommand("verify-cert", "replay a certificate");
  std::string verify_path;
  verify_cmd->add_option("file", verify_path)->required();

  // Global options may appear after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    ord::RunConfig cfg;
    if (!config_path.empty()) cfg = ord::load_config(config_path);
    if (!format.empty()) cfg.format = format;
    if (threads > 0) cfg.threads = threads;
    if (const char* env = std::getenv("ORDALIB_THREADS")) cfg.threads = std::atoi(env);
    if (seed != 0) cfg.seed = seed;
    if (group_k > 0) cfg.k = group_k;
    if (group_gens >= 0) cfg.consequence_generations = group_gens;
    cfg.validate();

    Output out;
    out.format = cfg.format;
    int code = kExitVerdict;

    if (cmp_cmd->parsed()) {
      std::vector<std::string> names;
      std::istringstream gs(cmp_gens);
      std::string tok;
      while (gs >> tok) names.push_back(tok);
      auto alpha = ord::Alphabet::of_names(names);
      ord::Cmp c = ord::magnus_compare(ord::Word::parse(cmp_u, alpha),
                                       ord::Word::parse(cmp_v, alpha));
      Json r;
      r["u"] = cmp_u;
      r["v"] = cmp_v;
      r["verdict"] = cmp_str(c);
      out.rows.push_back(r);
    } else if (!braid_op.empty()) {
      ord::BraidWord b = ord::BraidWord::parse(braid_w1, strands);
      Json r;
      r["strands"] = strands;
      r["word"] = braid_w1;
      if (braid_op == "sign") {
        auto s = ord::sigma_sign(b);
        r["sign"] = s.str();
        r["witness"] = ord::handle_reduce(b).format();
      } else if (braid_op == "compare") {
        ord::BraidWord b2 = ord::BraidWord::parse(braid_w2, strands);
        r["word2"] = braid_w2;
        r["verdict"] = cmp_str(ord::compare_dehornoy(b, b2));
      } else if (braid_op == "floor") {
        r["floor"] = ord::dehornoy_floor(b);
      } else if (braid_op == "prime") {
        bool prime = ord::provably_prime(b);
        r["verdict"] = prime ? "provably-prime" : "inconclusive";
        if (!prime) code = kExitUndetermined;
      } else if (braid_op == "genus") {
        std::int64_t k = ord::genus_bound(b);
        r["floor_bound"] = k;
        r["genus_lower_bound"] = k;  // g(K) >= k per the ordering bound
      } else if (braid_op == "alexander") {
        r["alexander"] = ord::alexander_from_braid(b).str();
      }
      out.rows.push_back(r);
    } else if (verdict_cmd->parsed()) {
      auto table = ord::load_knot_table(table_path);
      auto rows = ord::run_parallel(static_cast<int>(table.size()), cfg.threads, [&](int i) {
        const auto& k = table[static_cast<std::size_t>(i)];
        ord::Verdict v = ord::verdict_auto(k);
        Json r;
        r["name"] = k.name;
        r["verdict"] = v.str();
        r["rule"] = v.rule;
        if (v.roots_with_multiplicity >= 0) {
          r["roots_mult"] = v.roots_with_multiplicity;
          r["roots_distinct"] = v.roots_distinct;
        }
        r["alexander"] = k.resolve_polynomial().str();
        return r;
      });
      out.rows = rows;
    } else if (ab_cmd->parsed()) {
      auto inv = ord::abelianization(presentation_for(group_name));
      Json r;
      r["group"] = group_name;
      r["free_rank"] = inv.free_rank;
      Json tor = Json::array();
      for (const auto& t : inv.torsion) tor.push_back(t.str());
      r["torsion"] = tor;
      out.rows.push_back(r);
    } else if (order_g_cmd->parsed()) {
      auto res = ord::coset_enumeration(presentation_for(group_name), max_cosets);
      Json r;
      r["group"] = group_name;
      if (res.exceeded) {
        r["verdict"] = "ExceededBound";
        r["max_cosets"] = max_cosets;
        code = kExitUndetermined;
      } else {
        r["verdict"] = "Order";
        r["order"] = res.order;
      }
      out.rows.push_back(r);
    } else if (cat_cmd->parsed()) {
      for (const auto& e : ord::catalog()) {
        if (!group_name.empty() && e.name != group_name) continue;
        Json r;
        r["name"] = e.name;
        r["presentation"] = e.presentation.format();
        if (e.expected.lo_count) r["lo_count"] = *e.expected.lo_count;
        if (e.expected.left_orderable) r["left_orderable"] = *e.expected.left_orderable;
        if (e.expected.order) r["order"] = *e.expected.order;
        if (e.expected.complete) r["complete"] = *e.expected.complete;
        out.rows.push_back(r);
      }
      if (out.rows.empty()) {
        std::cerr << "no catalog entry named " << group_name << "\n";
        return kExitUsage;
      }
    } else if (nonlo_cmd->parsed()) {
      code = run_nonlo(group_name, nonlo_method, cfg, cert_path, out);
      if (code == kExitUsage) return code;
    } else if (kpart_cmd->parsed()) {
      const auto& entry = ord::catalog_lookup(group_name);
      ord::Oracle oracle = ord::oracle_for(entry, cfg.oracle_bounds);
      ord::Ball ball = oracle.ball(cfg.k, cfg.ball_max_elements);
      auto parts = conradian ? ord::enumerate_conradian_k_partitions(oracle, ball)
                             : ord::enumerate_k_partitions(ball);
      Json r;
      r["group"] = group_name;
      r["k"] = cfg.k;
      r["conradian"] = conradian;
      r["count"] = parts.size();
      if (!count_only) {
        Json jp = Json::array();
        for (const auto& q : parts) {
          Json members = Json::array();
          for (int e : q.members) members.push_back(ball.elements[static_cast<std::size_t>(e)].format());
          jp.push_back(members);
        }
        r["partitions"] = jp;
      }
      out.rows.push_back(r);
    } else if (complete_cmd->parsed()) {
      auto r = ord::find_blockers(presentation_for(group_name), cfg.consequence_generations,
                                  cfg.consequence_max_len, 5000);
      Json j;
      j["group"] = group_name;
      j["verdict"] = r.complete ? "Complete" : "Unknown";
      if (r.complete) j["generation"] = r.generation;
      out.rows.push_back(j);
      if (!r.complete) code = kExitUndetermined;
    } else if (zn_cmp->parsed()) {
      auto v = ord::OrderVector::parse(zn_v, zn_tiebreak);
      Json r;
      r["verdict"] = cmp_str(ord::zn_compare(v, parse_zvec(zn_m), parse_zvec(zn_n)));
      out.rows.push_back(r);
    } else if (zn_h->parsed()) {
      auto v = ord::OrderVector::parse(zn_v, zn_tiebreak);
      ord::Rat phi = ord::holder_phi(v, parse_zvec(zn_f), parse_zvec(zn_g), zn_k);
      Json r;
      r["k"] = zn_k;
      r["phi"] = boost::multiprecision::numerator(phi).str() + "/" +
                 boost::multiprecision::denominator(phi).str();
      out.rows.push_back(r);
    } else if (verify_cmd->parsed()) {
      code = run_verify_cert(verify_path, cfg, out);
    } else {
      std::cerr << "no operation selected\n";
      return kExitUsage;
    }

    out.emit();
    return code;
  } catch (const ord::Error& e) {
    switch (e.code()) {
      case ord::Err::NonTermination:
      case ord::Err::NormalizationFailure:
      case ord::Err::Internal:
        std::cerr << "internal guard: " << e.what() << "\n";
        return kExitGuard;
      default:
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
