// Free-group word algebra: indexed generator alphabets and freely reduced
// words in run-length (syllable) form.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordalib/error.hpp"

namespace ordalib {

enum class Cmp { Less, Equal, Greater };

struct GeneratorId {
  std::string name;
  std::optional<std::pair<int, int>> index;  // doubly indexed families, e.g. x[m,n]

  std::string str() const;

  friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
    return a.name == b.name && a.index == b.index;
  }
  friend bool operator<(const GeneratorId& a, const GeneratorId& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.index < b.index;
  }
};

// An alphabet fixes the set of generators and their order; subscript order of
// the ambient family is the construction order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<GeneratorId> gens);

  static std::shared_ptr<const Alphabet> of_names(const std::vector<std::string>& names);

  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorId& gen(int i) const { return gens_.at(static_cast<std::size_t>(i)); }
  int find(const GeneratorId& g) const;
  int find_name(const std::string& token) const;  // parses token into a GeneratorId first

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<GeneratorId> gens_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

struct Syllable {
  int gen = 0;             // position in the alphabet
  std::int64_t exp = 0;    // nonzero

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
};

class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  Word(AlphabetPtr alpha, std::vector<Syllable> sylls);  // freely reduces

  static Word identity(AlphabetPtr alpha) { return Word(std::move(alpha)); }
  static Word generator(AlphabetPtr alpha, int gen, std::int64_t exp = 1);

  // Grammar: tokens `name` or `name^k` (k nonzero, `^-1` allowed), separated
  // by whitespace or `*`; `1` or the empty string denotes the identity.
  static Word parse(const std::string& text, AlphabetPtr alpha);
  std::string format() const;

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Syllable>& syllables() const { return sylls_; }
  bool empty() const { return sylls_.empty(); }
  int syllable_count() const { return static_cast<int>(sylls_.size()); }
  std::int64_t length() const;  // letter length (sum of |exp|)

  Word operator*(const Word& rhs) const;  // freely reduced concatenation
  Word inverse() const;
  Word pow(std::int64_t n) const;
  Word conjugated_by(const Word& g) const { return g * (*this) * g.inverse(); }

  // w = conjugator * core * conjugator^{-1}, core without cancelling ends.
  std::pair<Word, Word> cyclically_reduce() const;
  Word cyclic_shift(std::int64_t letters) const;  // rotate left by letter count

  std::vector<int> letters() const;  // one entry per letter: +-(gen+1)
  static Word from_letters(AlphabetPtr alpha, const std::vector<int>& letters);

  // Exponent sum per generator (abelianization image).
  std::vector<std::int64_t> exponent_vector() const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator<(const Word& a, const Word& b);  // (length, syllables) order

  std::string key() const;  // injective string key for hashing/dedup

 private:
  void check_same_alphabet(const Word& rhs) const;
  void push_reduced(int gen, std::int64_t exp);

  AlphabetPtr alpha_;
  std::vector<Syllable> sylls_;
};

GeneratorId parse_generator_token(const std::string& token);

}  // namespace ordalib
