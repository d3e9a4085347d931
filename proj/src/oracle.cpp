#include "ordalib/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ordalib/braid.hpp"
#include "ordalib/error.hpp"

namespace ordalib {

// --- affine maps -----------------------------------------------------------

AffineMap AffineMap::identity() {
  AffineMap a;
  for (int i = 0; i < 3; ++i) a.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return a;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  // (this o inner)(x) = M_outer (M_inner x + t_inner) + t_outer
  AffineMap out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      long long s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * inner.m[k][j];
      out.m[i][j] = s;
    }
    long long s = t[i];
    for (int k = 0; k < 3; ++k) s += m[i][k] * inner.t[k];
    out.t[i] = s;
  }
  return out;
}

AffineMap AffineMap::inverse() const {
  // M in {-1,0,1}^{3x3} with |det| = 1: the inverse is the adjugate / det.
  long long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det != 1 && det != -1) fail(Err::OutOfRange, "affine map is not invertible over Z");
  AffineMap inv;
  auto cof = [&](int r, int c) {
    // Cyclic indexing builds the cofactor sign in.
    int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
    return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv.m[i][j] = cof(j, i) * det;  // adj / det with det = +-1
  for (int i = 0; i < 3; ++i) {
    long long s = 0;
    for (int k = 0; k < 3; ++k) s += inv.m[i][k] * t[k];
    inv.t[i] = -s;
  }
  return inv;
}

bool AffineMap::is_identity() const {
  for (int i = 0; i < 3; ++i) {
    if (t[i] != 0) return false;
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

std::string AffineMap::key() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) os << m[i][j] << ',';
  for (int i = 0; i < 3; ++i) os << t[i] << ',';
  return os.str();
}

void AffineMap::validate() const {
  long long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det != 1 && det != -1) fail(Err::OutOfRange, "affine action must have |det M| = 1");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m[i][j] < -1 || m[i][j] > 1) fail(Err::OutOfRange, "affine action entries must be in {-1,0,1}");
}

std::vector<AffineMap> crystallographic_action() {
  // a(x,y,z) = (x+1, 1-y, -z);  b(x,y,z) = (-x, y+1, 1-z).
  AffineMap a;
  a.m = {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};
  a.t = {1, 1, 0};
  AffineMap b;
  b.m = {{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
  b.t = {0, 1, 1};
  return {a, b};
}

// --- oracle ----------------------------------------------------------------

Oracle::Oracle(const Oracle& o)
    : kind_(o.kind_),
      alpha_(o.alpha_),
      action_(o.action_),
      strands_(o.strands_),
      pres_(o.pres_),
      bounds_(o.bounds_) {}

Oracle::Oracle(Oracle&& o) noexcept
    : kind_(o.kind_),
      alpha_(std::move(o.alpha_)),
      action_(std::move(o.action_)),
      strands_(o.strands_),
      pres_(std::move(o.pres_)),
      bounds_(o.bounds_) {}

Oracle Oracle::free_group(AlphabetPtr alpha) {
  Oracle o;
  o.kind_ = Kind::FreeGroup;
  o.alpha_ = std::move(alpha);
  return o;
}

Oracle Oracle::free_abelian(AlphabetPtr alpha) {
  Oracle o;
  o.kind_ = Kind::FreeAbelian;
  o.alpha_ = std::move(alpha);
  return o;
}

Oracle Oracle::klein_bottle(AlphabetPtr alpha) {
  if (alpha->size() != 2) fail(Err::OutOfRange, "Klein bottle backend needs exactly 2 generators");
  Oracle o;
  o.kind_ = Kind::Klein;
  o.alpha_ = std::move(alpha);
  return o;
}

Oracle Oracle::affine_crystallographic(AlphabetPtr alpha, std::vector<AffineMap> action) {
  if (static_cast<int>(action.size()) != alpha->size())
    fail(Err::OutOfRange, "one affine map per generator required");
  for (const auto& a : action) a.validate();
  Oracle o;
  o.kind_ = Kind::Affine;
  o.alpha_ = std::move(alpha);
  o.action_ = std::move(action);
  return o;
}

Oracle Oracle::braid(int strands) {
  if (strands < 2) fail(Err::OutOfRange, "braid backend needs >= 2 strands");
  Oracle o;
  o.kind_ = Kind::Braid;
  o.strands_ = strands;
  std::vector<std::string> names;
  for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
  o.alpha_ = Alphabet::of_names(names);
  return o;
}

Oracle Oracle::bounded_rewriting(Presentation p, RewriteBounds bounds) {
  Oracle o;
  o.kind_ = Kind::Bounded;
  o.alpha_ = p.alphabet();
  o.pres_ = std::make_shared<Presentation>(std::move(p));
  o.bounds_ = bounds;
  return o;
}

bool Oracle::has_normal_forms() const {
  return kind_ == Kind::FreeGroup || kind_ == Kind::FreeAbelian || kind_ == Kind::Klein ||
         kind_ == Kind::Braid;
}

std::pair<std::int64_t, std::int64_t> Oracle::klein_pair(const Word& w) const {
  // Normal form x^m y^n via y^n x^e = x^e y^{-n}.
  std::int64_t m = 0, n = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == 0) {
      m += s.exp;
      if (s.exp % 2 != 0) n = -n;
    } else {
      n += s.exp;
    }
  }
  return {m, n};
}

AffineMap Oracle::affine_of(const Word& w) const {
  // Left action: the leftmost letter acts last.
  AffineMap acc = AffineMap::identity();
  for (const auto& s : w.syllables()) {
    const AffineMap& g = action_[static_cast<std::size_t>(s.gen)];
    AffineMap step = s.exp > 0 ? g : g.inverse();
    for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) acc = acc.compose(step);
  }
  return acc;
}

namespace {

BraidWord to_braid(const Word& w, int strands) {
  BraidWord b;
  b.strands = strands;
  b.letters = w.letters();
  return b;
}

Word from_braid(const BraidWord& b, const AlphabetPtr& alpha) {
  std::vector<int> ls = b.letters;
  return Word::from_letters(alpha, ls);
}

}  // namespace

OracleVerdict Oracle::equal(const Word& u, const Word& v) const {
  if (!(u.alphabet() == alpha_ || *u.alphabet() == *alpha_) ||
      !(v.alphabet() == alpha_ || *v.alphabet() == *alpha_))
    fail(Err::AlphabetMismatch, "words over a different alphabet than the oracle");
  switch (kind_) {
    case Kind::FreeGroup:
      return u == v ? OracleVerdict::equal() : OracleVerdict::not_equal();
    case Kind::FreeAbelian:
      return u.exponent_vector() == v.exponent_vector() ? OracleVerdict::equal()
                                                        : OracleVerdict::not_equal();
    case Kind::Klein:
      return klein_pair(u) == klein_pair(v) ? OracleVerdict::equal() : OracleVerdict::not_equal();
    case Kind::Affine:
      return affine_of(u) == affine_of(v) ? OracleVerdict::equal() : OracleVerdict::not_equal();
    case Kind::Braid: {
      BraidWord d = to_braid(u.inverse() * v, strands_);
      return handle_reduce(d).letters.empty() ? OracleVerdict::equal() : OracleVerdict::not_equal();
    }
    case Kind::Bounded:
      return bounded_is_trivial(u * v.inverse());
  }
  fail(Err::Internal, "unreachable");
}

Word Oracle::normal_form(const Word& w) const {
  switch (kind_) {
    case Kind::FreeGroup:
      return w;
    case Kind::FreeAbelian: {
      auto ev = w.exponent_vector();
      Word out = Word::identity(alpha_);
      for (int g = 0; g < alpha_->size(); ++g)
        if (ev[static_cast<std::size_t>(g)] != 0)
          out = out * Word::generator(alpha_, g, ev[static_cast<std::size_t>(g)]);
      return out;
    }
    case Kind::Klein: {
      auto [m, n] = klein_pair(w);
      Word out = Word::identity(alpha_);
      if (m != 0) out = out * Word::generator(alpha_, 0, m);
      if (n != 0) out = out * Word::generator(alpha_, 1, n);
      return out;
    }
    case Kind::Braid:
      return from_braid(garside_normal_form(to_braid(w, strands_)), alpha_);
    default:
      fail(Err::UnsupportedBackend, "backend has no canonical normal form");
  }
}

std::optional<std::string> Oracle::canonical_key(const Word& w) const {
  switch (kind_) {
    case Kind::FreeGroup:
      return w.key();
    case Kind::FreeAbelian:
    case Kind::Klein:
    case Kind::Braid:
      return normal_form(w).key();
    case Kind::Affine:
      return affine_of(w).key();
    case Kind::Bounded:
      return std::nullopt;
  }
  return std::nullopt;
}

OracleVerdict Oracle::bounded_is_trivial(const Word& w) const {
  if (w.empty()) return OracleVerdict::equal_with({});
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(w.key());
    if (it != cache_.end()) return it->second;
  }

  OracleVerdict out = OracleVerdict::unknown();
  // Abelianization separates: w is nontrivial unless its exponent vector lies
  // in the row lattice of the relator matrix.
  IntMatrix rm = relator_matrix(*pres_);
  SmithNormalForm snf = smith_normal_form(rm);
  auto ev = w.exponent_vector();
  // z = x V; solvable iff d_i | z_i for all i (d_i = 0 forcing z_i = 0).
  std::vector<Int> z(static_cast<std::size_t>(snf.right.cols()), Int(0));
  for (int j = 0; j < snf.right.cols(); ++j) {
    Int s = 0;
    for (int i = 0; i < snf.right.rows(); ++i) s += Int(ev[static_cast<std::size_t>(i)]) * snf.right.at(i, j);
    z[static_cast<std::size_t>(j)] = s;
  }
  bool solvable = true;
  for (std::size_t j = 0; j < z.size(); ++j) {
    Int d = j < snf.diagonal.size() ? snf.diagonal[j] : Int(0);
    if (d == 0 ? z[j] != 0 : z[j] % d != 0) solvable = false;
  }
  if (!solvable) {
    out = OracleVerdict::not_equal();
  } else {
    auto cert = rewrite_search(*pres_, w, bounds_);
    if (cert) out = OracleVerdict::equal_with(*cert);
  }

  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(w.key(), out);
  return out;
}

std::optional<RewriteCertificate> rewrite_search(const Presentation& p, const Word& w,
                                                 const RewriteBounds& bounds) {
  if (w.empty()) return RewriteCertificate{};
  struct MoveInfo {
    std::string parent;
    std::int64_t pos = 0;
    int relator = 0;
    int sign = 1;
    std::int64_t shift = 0;
    int depth = 0;
  };
  std::unordered_map<std::string, MoveInfo> seen;
  std::unordered_map<std::string, Word> words;
  std::deque<std::string> queue;

  const std::string start_key = w.key();
  seen.emplace(start_key, MoveInfo{std::string(), 0, -1, 0, 0, 0});
  words.emplace(start_key, w);
  queue.push_back(start_key);

  // Precompute relator variants.
  struct Variant {
    Word word;
    int relator;
    int sign;
    std::int64_t shift;
  };
  std::vector<Variant> variants;
  for (int i = 0; i < static_cast<int>(p.relators().size()); ++i) {
    for (int sign : {+1, -1}) {
      Word base = sign > 0 ? p.relators()[static_cast<std::size_t>(i)]
                           : p.relators()[static_cast<std::size_t>(i)].inverse();
      std::int64_t len = base.length();
      for (std::int64_t s = 0; s < len; ++s) variants.push_back({base.cyclic_shift(s), i, sign, s});
    }
  }

  bool found_empty = false;
  std::string found;
  while (!queue.empty()) {
    std::string cur_key = queue.front();
    queue.pop_front();
    const MoveInfo info = seen.at(cur_key);
    if (info.depth >= bounds.max_depth) continue;
    Word cur = words.at(cur_key);
    auto cur_letters = cur.letters();
    for (std::int64_t pos = 0; pos <= static_cast<std::int64_t>(cur_letters.size()); ++pos) {
      for (const auto& var : variants) {
        std::vector<int> next_letters(cur_letters.begin(), cur_letters.begin() + pos);
        auto vls = var.word.letters();
        next_letters.insert(next_letters.end(), vls.begin(), vls.end());
        next_letters.insert(next_letters.end(), cur_letters.begin() + pos, cur_letters.end());
        Word next = Word::from_letters(p.alphabet(), next_letters);
        if (next.length() > bounds.max_len) continue;
        std::string key = next.key();
        if (seen.count(key)) continue;
        if (static_cast<std::int64_t>(seen.size()) >= bounds.max_states) return std::nullopt;
        seen.emplace(key, MoveInfo{cur_key, pos, var.relator, var.sign, var.shift, info.depth + 1});
        words.emplace(key, next);
        if (next.empty()) {
          found = key;
          found_empty = true;
          goto done;
        }
        queue.push_back(key);
      }
    }
  }
done:
  if (!found_empty) return std::nullopt;

  // Walk back: empty = g_k ... g_1 w, so w = g_1^{-1} ... g_k^{-1}.
  std::vector<RelatorFactor> factors;
  std::string at = found;
  while (true) {
    const MoveInfo& info = seen.at(at);
    if (info.relator < 0) break;
    const Word& parent = words.at(info.parent);
    auto pls = parent.letters();
    std::vector<int> prefix_letters(pls.begin(), pls.begin() + info.pos);
    Word prefix = Word::from_letters(p.alphabet(), prefix_letters);
    Word base = info.sign > 0 ? p.relators()[static_cast<std::size_t>(info.relator)]
                              : p.relators()[static_cast<std::size_t>(info.relator)].inverse();
    auto bls = base.letters();
    std::vector<int> rp(bls.begin(), bls.begin() + info.shift);
    Word rot_prefix = Word::from_letters(p.alphabet(), rp);
    // g = prefix * rot_shift(r^sign) * prefix^{-1}; record g^{-1}.
    factors.push_back(RelatorFactor{prefix * rot_prefix.inverse(), info.relator, -info.sign});
    at = info.parent;
  }
  // The walk back collected g_k^{-1}..g_1^{-1}; the certificate needs
  // w = g_1^{-1} g_2^{-1} ... g_k^{-1}.
  std::reverse(factors.begin(), factors.end());
  return factors;
}

// --- balls -----------------------------------------------------------------

Ball Oracle::ball(int k, std::int64_t max_elements) const {
  if (k < 1) fail(Err::OutOfRange, "ball radius must be >= 1");
  Ball b;
  b.radius = k;

  auto key_of = [&](const Word& w) -> std::string {
    auto key = canonical_key(w);
    if (key) return *key;
    fail(Err::OracleIncomplete, "backend cannot canonicalize ball elements");
  };

  if (kind_ == Kind::Bounded) {
    fail(Err::OracleIncomplete,
         "bounded rewriting cannot certify distinctness of ball elements");
  }

  Word id = Word::identity(alpha_);
  b.elements.push_back(id);
  b.index_by_key.emplace(key_of(id), 0);

  std::vector<Word> frontier{id};
  for (int level = 1; level <= k; ++level) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (int g = 0; g < alpha_->size(); ++g) {
        for (int dir : {+1, -1}) {
          Word v = w * Word::generator(alpha_, g, dir);
          std::string key = key_of(v);
          if (b.index_by_key.count(key)) continue;
          if (static_cast<std::int64_t>(b.elements.size()) >= max_elements)
            fail(Err::BallTooLarge, "ball element cap exceeded");
          b.index_by_key.emplace(key, static_cast<int>(b.elements.size()));
          b.elements.push_back(v);
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }

  const int n = static_cast<int>(b.elements.size());
  b.inverse.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    auto it = b.index_by_key.find(key_of(b.elements[static_cast<std::size_t>(i)].inverse()));
    if (it == b.index_by_key.end()) fail(Err::Internal, "ball not closed under inversion");
    b.inverse[static_cast<std::size_t>(i)] = it->second;
  }
  b.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Word prod = b.elements[static_cast<std::size_t>(i)] * b.elements[static_cast<std::size_t>(j)];
      auto it = b.index_by_key.find(key_of(prod));
      if (it != b.index_by_key.end())
        b.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
    }
  return b;
}

int Oracle::ball_lookup(const Ball& b, const Word& w) const {
  auto key = canonical_key(w);
  if (!key) return -1;
  auto it = b.index_by_key.find(*key);
  return it == b.index_by_key.end() ? -1 : it->second;
}

Oracle oracle_for(const CatalogEntry& entry, const RewriteBounds& bounds) {
  switch (entry.oracle_hint) {
    case OracleKind::FreeGroup:
      return Oracle::free_group(entry.presentation.alphabet());
    case OracleKind::FreeAbelian:
      return Oracle::free_abelian(entry.presentation.alphabet());
    case OracleKind::KleinBottle:
      return Oracle::klein_bottle(entry.presentation.alphabet());
    case OracleKind::AffineCrystallographic:
      return Oracle::affine_crystallographic(entry.presentation.alphabet(),
                                             crystallographic_action());
    case OracleKind::Braid: {
      int strands = entry.presentation.generator_count() + 1;
      return Oracle::braid(strands);
    }
    case OracleKind::BoundedRewriting:
      return Oracle::bounded_rewriting(entry.presentation, bounds);
  }
  fail(Err::Internal, "unreachable");
}

}  // namespace ordalib
