#include "ordalib/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "ordalib/error.hpp"

namespace ordalib {

Presentation::Presentation(AlphabetPtr alpha, std::vector<Word> relators) : alpha_(std::move(alpha)) {
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    auto [conj, core] = r.cyclically_reduce();
    (void)conj;
    relators_.push_back(core);
  }
}

Presentation Presentation::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) fail(Err::ParseError, "presentation needs `gens: ... ; rels: ...`");
  std::string gpart = text.substr(0, semi);
  std::string rpart = text.substr(semi + 1);
  auto strip = [](std::string s, const std::string& prefix) {
    auto pos = s.find(prefix);
    if (pos == std::string::npos) fail(Err::ParseError, "missing `" + prefix + "`");
    return s.substr(pos + prefix.size());
  };
  gpart = strip(gpart, "gens:");
  rpart = strip(rpart, "rels:");

  std::vector<std::string> names;
  std::istringstream gs(gpart);
  std::string tok;
  while (gs >> tok) names.push_back(tok);
  auto alpha = Alphabet::of_names(names);

  std::vector<Word> rels;
  std::string cur;
  auto flush = [&]() {
    std::string trimmed;
    for (char c : cur)
      if (c != ' ' || !trimmed.empty()) trimmed.push_back(c);
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
    if (!trimmed.empty()) rels.push_back(Word::parse(trimmed, alpha));
    cur.clear();
  };
  for (char c : rpart) {
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return Presentation(alpha, std::move(rels));
}

std::string Presentation::format() const {
  std::ostringstream os;
  os << "gens:";
  for (int i = 0; i < alpha_->size(); ++i) os << ' ' << alpha_->gen(i).str();
  os << " ; rels: ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) os << " , ";
    std::string f = relators_[i].format();
    for (auto& ch : f)
      if (ch == ' ') ch = '*';
    os << f;
  }
  return os.str();
}

std::optional<Int> AbelianInvariants::order() const {
  if (free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::str() const {
  std::ostringstream os;
  os << "rank " << free_rank << ", torsion (";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) os << ',';
    os << torsion[i].str();
  }
  os << ')';
  return os.str();
}

IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix m(static_cast<int>(p.relators().size()), p.generator_count());
  for (int r = 0; r < m.rows(); ++r) {
    auto ev = p.relators()[static_cast<std::size_t>(r)].exponent_vector();
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = Int(ev[static_cast<std::size_t>(c)]);
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  if (p.relators().empty()) return AbelianInvariants{p.generator_count(), {}};
  SmithNormalForm snf = smith_normal_form(relator_matrix(p));
  AbelianInvariants out;
  int rank = 0;
  for (const auto& d : snf.diagonal) {
    if (d != 0) ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = p.generator_count() - rank;
  return out;
}

// --- Todd-Coxeter ----------------------------------------------------------

namespace {

struct CosetTable {
  int ngens;
  std::vector<std::vector<long long>> row;  // row[c][g], g in 0..2*ngens-1; -1 undefined
  std::vector<long long> fwd;               // union-find to live coset (or self)
  std::deque<std::pair<long long, long long>> pending;
  long long live = 0;

  explicit CosetTable(int n) : ngens(n) { new_coset(); }

  long long new_coset() {
    row.emplace_back(static_cast<std::size_t>(2 * ngens), -1);
    fwd.push_back(static_cast<long long>(row.size()) - 1);
    ++live;
    return static_cast<long long>(row.size()) - 1;
  }

  long long rep(long long c) {
    while (fwd[static_cast<std::size_t>(c)] != c) {
      fwd[static_cast<std::size_t>(c)] = fwd[static_cast<std::size_t>(fwd[static_cast<std::size_t>(c)])];
      c = fwd[static_cast<std::size_t>(c)];
    }
    return c;
  }

  static int slot(int letter) {  // letter = +-(g+1)
    int g = std::abs(letter) - 1;
    return 2 * g + (letter > 0 ? 0 : 1);
  }
  static int inverse_slot(int letter) { return slot(-letter); }

  long long get(long long c, int letter) {
    long long t = row[static_cast<std::size_t>(c)][static_cast<std::size_t>(slot(letter))];
    return t < 0 ? -1 : rep(t);
  }

  void set(long long c, int letter, long long d) {
    c = rep(c);
    d = rep(d);
    long long existing = get(c, letter);
    if (existing >= 0) {
      if (existing != d) merge(existing, d);
      return;
    }
    row[static_cast<std::size_t>(c)][static_cast<std::size_t>(slot(letter))] = d;
    long long back = get(d, -letter);
    if (back < 0) {
      row[static_cast<std::size_t>(d)][static_cast<std::size_t>(inverse_slot(letter))] = c;
    } else if (back != c) {
      merge(back, c);
    }
  }

  void merge(long long a, long long b) {
    pending.emplace_back(a, b);
    process();
  }

  void process() {
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      x = rep(x);
      y = rep(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      fwd[static_cast<std::size_t>(y)] = x;
      --live;
      for (int s = 0; s < 2 * ngens; ++s) {
        long long t = row[static_cast<std::size_t>(y)][static_cast<std::size_t>(s)];
        if (t < 0) continue;
        int letter = (s % 2 == 0) ? (s / 2 + 1) : -(s / 2 + 1);
        long long have = row[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)];
        if (have < 0) {
          row[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)] = t;
          long long tr = rep(t);
          long long back = row[static_cast<std::size_t>(tr)][static_cast<std::size_t>(inverse_slot(letter))];
          if (back < 0)
            row[static_cast<std::size_t>(tr)][static_cast<std::size_t>(inverse_slot(letter))] = x;
          else if (rep(back) != x)
            pending.emplace_back(back, x);
        } else if (rep(have) != rep(t)) {
          pending.emplace_back(have, t);
        }
      }
    }
  }
};

}  // namespace

CosetResult coset_enumeration(const Presentation& p, long long max_cosets) {
  std::vector<std::vector<int>> rels;
  rels.reserve(p.relators().size());
  for (const auto& r : p.relators()) rels.push_back(r.letters());

  CosetTable table(p.generator_count());

  for (;;) {
    // HLT scan: trace every relator at every live coset, defining cosets at
    // interior gaps and closing the cycle at the last letter.
    for (long long c = 0; c < static_cast<long long>(table.row.size()); ++c) {
      if (table.rep(c) != c) continue;
      for (const auto& rel : rels) {
        if (table.rep(c) != c) break;  // merged away while scanning
        long long cur = c;
        bool alive = true;
        for (std::size_t i = 0; i < rel.size(); ++i) {
          long long next = table.get(cur, rel[i]);
          if (next < 0) {
            if (i + 1 == rel.size()) {
              table.set(cur, rel[i], table.rep(c));
            } else {
              if (static_cast<long long>(table.row.size()) >= max_cosets)
                return CosetResult::bound_exceeded();
              long long fresh = table.new_coset();
              table.set(cur, rel[i], fresh);
            }
            next = table.get(table.rep(cur), rel[i]);
          }
          cur = table.rep(next);
          if (table.rep(c) != c) {
            alive = false;
            break;
          }
        }
        if (alive) table.merge(cur, table.rep(c));
      }
    }

    // Every trace closed.  Fill one remaining gap and rescan, if any.
    bool gap = false;
    for (long long c = 0; c < static_cast<long long>(table.row.size()) && !gap; ++c) {
      if (table.rep(c) != c) continue;
      for (int g = 1; g <= p.generator_count() && !gap; ++g) {
        for (int dir : {+1, -1}) {
          if (table.get(c, dir * g) < 0) {
            if (static_cast<long long>(table.row.size()) >= max_cosets)
              return CosetResult::bound_exceeded();
            long long fresh = table.new_coset();
            table.set(c, dir * g, fresh);
            gap = true;
            break;
          }
        }
      }
    }
    if (!gap) break;
  }

  return CosetResult::finite(table.live);
}

// --- certificates and consequences ----------------------------------------

Word certificate_element(const Presentation& p, const RewriteCertificate& cert) {
  Word acc = Word::identity(p.alphabet());
  for (const auto& f : cert) {
    if (f.relator < 0 || f.relator >= static_cast<int>(p.relators().size()))
      fail(Err::OutOfRange, "certificate references unknown relator");
    const Word& r = p.relators()[static_cast<std::size_t>(f.relator)];
    Word piece = f.conjugator * (f.sign >= 0 ? r : r.inverse()) * f.conjugator.inverse();
    acc = acc * piece;
  }
  return acc;
}

bool replay_certificate(const Presentation& p, const Word& w, const RewriteCertificate& cert) {
  Word cur = w;
  for (auto it = cert.rbegin(); it != cert.rend(); ++it) {
    const Word& r = p.relators()[static_cast<std::size_t>(it->relator)];
    Word piece = it->conjugator * (it->sign >= 0 ? r.inverse() : r) * it->conjugator.inverse();
    cur = cur * piece;
  }
  return cur.empty();
}

namespace {

// Certificate of rot_s(r^sign): prefix^{-1} * r^sign * prefix.
RewriteCertificate variant_certificate(const Presentation& p, int rel, int sign, std::int64_t shift) {
  const Word& r = p.relators()[static_cast<std::size_t>(rel)];
  Word base = sign >= 0 ? r : r.inverse();
  auto ls = base.letters();
  std::vector<int> prefix(ls.begin(), ls.begin() + shift);
  Word c = Word::from_letters(p.alphabet(), prefix).inverse();
  return {RelatorFactor{c, rel, sign}};
}

RewriteCertificate conjugate_certificate(const Word& g, const RewriteCertificate& cert) {
  RewriteCertificate out;
  out.reserve(cert.size());
  for (const auto& f : cert) out.push_back(RelatorFactor{g * f.conjugator, f.relator, f.sign});
  return out;
}

RewriteCertificate concat_certificates(const RewriteCertificate& a, const RewriteCertificate& b) {
  RewriteCertificate out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<Consequence> consequences(const Presentation& p, std::int64_t max_len, int max_count,
                                      int max_generation) {
  if (max_len <= 0 || max_count <= 0) fail(Err::OutOfRange, "bounds must be positive");
  std::vector<Consequence> out;
  std::set<std::string> seen;
  seen.insert(std::string());  // never emit the empty word

  auto emit = [&](const Word& w, const RewriteCertificate& cert, int gen) -> bool {
    if (w.length() > max_len || static_cast<int>(out.size()) >= max_count) return false;
    if (!seen.insert(w.key()).second) return false;
    out.push_back(Consequence{w, cert, gen});
    return true;
  };

  // Generation 0: cyclic permutations of relators and of their inverses.
  std::vector<Consequence> prev;
  for (int i = 0; i < static_cast<int>(p.relators().size()); ++i) {
    const Word& r = p.relators()[static_cast<std::size_t>(i)];
    for (int sign : {+1, -1}) {
      Word base = sign > 0 ? r : r.inverse();
      std::int64_t len = base.length();
      for (std::int64_t s = 0; s < std::max<std::int64_t>(len, 1); ++s) {
        Word w = base.cyclic_shift(s);
        auto cert = variant_certificate(p, i, sign, s);
        if (emit(w, cert, 0)) prev.push_back(out.back());
      }
    }
  }
  std::vector<Consequence> base_variants = prev;

  for (int gen = 1; gen <= max_generation && static_cast<int>(out.size()) < max_count; ++gen) {
    std::vector<Consequence> fresh;
    // Generator conjugates of the previous generation.
    for (const auto& c : prev) {
      for (int g = 0; g < p.generator_count() && static_cast<int>(out.size()) < max_count; ++g) {
        for (int dir : {+1, -1}) {
          Word conj = Word::generator(p.alphabet(), g, dir);
          Word w = (conj * c.word * conj.inverse());
          auto cert = conjugate_certificate(conj, c.certificate);
          if (emit(w, cert, gen)) fresh.push_back(out.back());
        }
      }
    }
    // Pairwise products with generation-0 variants, plus cyclic permutations.
    for (const auto& c : prev) {
      for (const auto& v : base_variants) {
        if (static_cast<int>(out.size()) >= max_count) break;
        Word prod = c.word * v.word;
        if (prod.empty()) continue;
        auto cert = concat_certificates(c.certificate, v.certificate);
        auto [conj, core] = prod.cyclically_reduce();
        if (core.empty()) continue;
        RewriteCertificate core_cert = conjugate_certificate(conj.inverse(), cert);
        std::int64_t len = core.length();
        for (std::int64_t s = 0; s < len; ++s) {
          Word w = core.cyclic_shift(s);
          auto pls = core.letters();
          std::vector<int> prefix(pls.begin(), pls.begin() + s);
          Word shift_conj = Word::from_letters(p.alphabet(), prefix).inverse();
          auto cert_s = conjugate_certificate(shift_conj, core_cert);
          if (emit(w, cert_s, gen)) fresh.push_back(out.back());
        }
      }
    }
    prev = std::move(fresh);
    if (prev.empty()) break;
  }

  std::sort(out.begin(), out.end(), [](const Consequence& a, const Consequence& b) {
    if (a.generation != b.generation) return a.generation < b.generation;
    return a.word < b.word;
  });
  return out;
}

}  // namespace ordalib
