// Pluggable word-problem backends and Cayley-ball construction.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordalib/presentation.hpp"
#include "ordalib/word.hpp"

namespace ordalib {

struct OracleVerdict {
  enum Value { Equal, NotEqual, Unknown } value = Unknown;
  std::optional<RewriteCertificate> certificate;  // present for bounded-rewriting Equal

  static OracleVerdict equal() { return {Equal, std::nullopt}; }
  static OracleVerdict equal_with(RewriteCertificate c) { return {Equal, std::move(c)}; }
  static OracleVerdict not_equal() { return {NotEqual, std::nullopt}; }
  static OracleVerdict unknown() { return {Unknown, std::nullopt}; }
};

// Invertible integer affine map x -> M x + t on Z^3.
struct AffineMap {
  std::array<std::array<long long, 3>, 3> m{};
  std::array<long long, 3> t{};

  static AffineMap identity();
  AffineMap compose(const AffineMap& inner) const;  // this * inner (apply inner first)
  AffineMap inverse() const;
  bool is_identity() const;
  bool operator==(const AffineMap& o) const { return m == o.m && t == o.t; }
  std::string key() const;
  void validate() const;  // entries in {-1,0,1}, |det| = 1
};

struct RewriteBounds {
  std::int64_t max_len = 24;
  int max_depth = 12;
  std::int64_t max_states = 200000;
};

struct Ball {
  int radius = 0;
  std::vector<Word> elements;             // elements[0] = identity
  std::vector<int> inverse;               // index of the inverse element
  std::vector<std::vector<int>> table;    // product index, -1 if outside the ball
  std::unordered_map<std::string, int> index_by_key;
};

class Oracle {
 public:
  static Oracle free_group(AlphabetPtr alpha);
  static Oracle free_abelian(AlphabetPtr alpha);
  static Oracle klein_bottle(AlphabetPtr alpha);  // gens (x, y) with x y x^{-1} = y^{-1}
  static Oracle affine_crystallographic(AlphabetPtr alpha, std::vector<AffineMap> action);
  static Oracle braid(int strands);
  static Oracle bounded_rewriting(Presentation p, RewriteBounds bounds = {});

  const AlphabetPtr& alphabet() const { return alpha_; }

  OracleVerdict equal(const Word& u, const Word& v) const;
  OracleVerdict is_trivial(const Word& w) const { return equal(w, Word::identity(alpha_)); }

  // Canonical representative; UnsupportedBackend for affine/bounded backends.
  Word normal_form(const Word& w) const;

  // Injective element key when the backend can decide equality outright.
  std::optional<std::string> canonical_key(const Word& w) const;

  Ball ball(int k, std::int64_t max_elements = 20000) const;

  // Index of w inside the ball, or -1.
  int ball_lookup(const Ball& b, const Word& w) const;

  bool has_normal_forms() const;

 private:
  enum class Kind { FreeGroup, FreeAbelian, Klein, Affine, Braid, Bounded };

  Oracle() = default;

  std::pair<std::int64_t, std::int64_t> klein_pair(const Word& w) const;
  AffineMap affine_of(const Word& w) const;
  OracleVerdict bounded_is_trivial(const Word& w) const;

  Kind kind_ = Kind::FreeGroup;
  AlphabetPtr alpha_;
  std::vector<AffineMap> action_;
  int strands_ = 0;
  std::shared_ptr<Presentation> pres_;
  RewriteBounds bounds_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, OracleVerdict> cache_;

 public:
  Oracle(const Oracle& o);
  Oracle& operator=(const Oracle&) = delete;
  Oracle(Oracle&& o) noexcept;
};

// Search for a certificate that w = 1 using relator insertions; breadth-first
// over freely reduced words within the given bounds.
std::optional<RewriteCertificate> rewrite_search(const Presentation& p, const Word& w,
                                                 const RewriteBounds& bounds);

// Oracle for a catalog entry, honoring its oracle hint.
Oracle oracle_for(const CatalogEntry& entry, const RewriteBounds& bounds = {});

// The crystallographic group's affine action (a, b from the catalog entry).
std::vector<AffineMap> crystallographic_action();

}  // namespace ordalib
