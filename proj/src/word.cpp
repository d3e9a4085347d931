#include "ordalib/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace ordalib {

std::string GeneratorId::str() const {
  if (!index) return name;
  std::ostringstream os;
  os << name << '[' << index->first << ',' << index->second << ']';
  return os.str();
}

Alphabet::Alphabet(std::vector<GeneratorId> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name.empty()) fail(Err::ParseError, "generator with empty name");
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] == gens_[j]) fail(Err::ParseError, "duplicate generator " + gens_[i].str());
  }
}

std::shared_ptr<const Alphabet> Alphabet::of_names(const std::vector<std::string>& names) {
  std::vector<GeneratorId> gens;
  gens.reserve(names.size());
  for (const auto& n : names) gens.push_back(parse_generator_token(n));
  return std::make_shared<Alphabet>(std::move(gens));
}

int Alphabet::find(const GeneratorId& g) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == g) return static_cast<int>(i);
  return -1;
}

int Alphabet::find_name(const std::string& token) const { return find(parse_generator_token(token)); }

GeneratorId parse_generator_token(const std::string& token) {
  auto lb = token.find('[');
  if (lb == std::string::npos) return GeneratorId{token, std::nullopt};
  if (token.back() != ']') fail(Err::ParseError, "malformed generator token: " + token);
  std::string name = token.substr(0, lb);
  std::string inner = token.substr(lb + 1, token.size() - lb - 2);
  auto comma = inner.find(',');
  if (comma == std::string::npos) fail(Err::ParseError, "generator index must be a pair: " + token);
  try {
    int m = std::stoi(inner.substr(0, comma));
    int n = std::stoi(inner.substr(comma + 1));
    return GeneratorId{name, std::make_pair(m, n)};
  } catch (const std::exception&) {
    fail(Err::ParseError, "malformed generator index: " + token);
  }
}

Word::Word(AlphabetPtr alpha, std::vector<Syllable> sylls) : alpha_(std::move(alpha)) {
  for (const auto& s : sylls) {
    if (s.gen < 0 || s.gen >= alpha_->size()) fail(Err::UnknownGenerator, "generator out of range");
    if (s.exp == 0) fail(Err::MalformedExponent, "zero exponent syllable");
    push_reduced(s.gen, s.exp);
  }
}

Word Word::generator(AlphabetPtr alpha, int gen, std::int64_t exp) {
  Word w(std::move(alpha));
  if (exp != 0) w.push_reduced(gen, exp);
  return w;
}

void Word::push_reduced(int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!sylls_.empty() && sylls_.back().gen == gen) {
    sylls_.back().exp += exp;
    if (sylls_.back().exp == 0) sylls_.pop_back();
    return;
  }
  sylls_.push_back(Syllable{gen, exp});
}

Word Word::parse(const std::string& text, AlphabetPtr alpha) {
  Word w(alpha);
  std::string token;
  std::vector<std::string> tokens;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '*') {
      if (!token.empty()) tokens.push_back(token);
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) tokens.push_back(token);

  for (const auto& t : tokens) {
    if (t == "1") continue;
    std::string base = t;
    std::int64_t exp = 1;
    auto caret = t.find('^');
    if (caret != std::string::npos) {
      base = t.substr(0, caret);
      std::string es = t.substr(caret + 1);
      if (es.empty()) fail(Err::MalformedExponent, "missing exponent in token: " + t);
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(es, &pos);
      } catch (const std::exception&) {
        fail(Err::MalformedExponent, "non-integer exponent in token: " + t);
      }
      if (pos != es.size()) fail(Err::MalformedExponent, "non-integer exponent in token: " + t);
      if (v == 0) fail(Err::MalformedExponent, "zero exponent in token: " + t);
      exp = v;
    }
    int gen = alpha->find_name(base);
    if (gen < 0) fail(Err::UnknownGenerator, "unknown generator: " + base);
    w.push_reduced(gen, exp);
  }
  return w;
}

std::string Word::format() const {
  if (sylls_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : sylls_) {
    if (!first) os << ' ';
    first = false;
    os << alpha_->gen(s.gen).str();
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : sylls_) n += std::llabs(s.exp);
  return n;
}

void Word::check_same_alphabet(const Word& rhs) const {
  if (!alpha_ || !rhs.alpha_) fail(Err::AlphabetMismatch, "word without alphabet");
  if (alpha_ != rhs.alpha_ && !(*alpha_ == *rhs.alpha_))
    fail(Err::AlphabetMismatch, "words over different alphabets");
}

Word Word::operator*(const Word& rhs) const {
  check_same_alphabet(rhs);
  Word out(alpha_);
  out.sylls_ = sylls_;
  for (const auto& s : rhs.sylls_) out.push_reduced(s.gen, s.exp);
  return out;
}

Word Word::inverse() const {
  Word out(alpha_);
  out.sylls_.reserve(sylls_.size());
  for (auto it = sylls_.rbegin(); it != sylls_.rend(); ++it)
    out.sylls_.push_back(Syllable{it->gen, -it->exp});
  return out;
}

Word Word::pow(std::int64_t n) const {
  Word base = n < 0 ? inverse() : *this;
  std::int64_t k = n < 0 ? -n : n;
  Word out = Word::identity(alpha_);
  for (std::int64_t i = 0; i < k; ++i) out = out * base;
  return out;
}

std::pair<Word, Word> Word::cyclically_reduce() const {
  Word conj(alpha_);
  std::vector<Syllable> core = sylls_;
  while (core.size() >= 2) {
    Syllable f = core.front();
    Syllable l = core.back();
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
    std::int64_t t = std::min(std::llabs(f.exp), std::llabs(l.exp));
    std::int64_t dir = f.exp > 0 ? 1 : -1;
    conj.push_reduced(f.gen, dir * t);
    core.front().exp -= dir * t;
    core.back().exp += dir * t;
    if (core.back().exp == 0) core.pop_back();
    if (!core.empty() && core.front().exp == 0) core.erase(core.begin());
  }
  return {conj, Word(alpha_, core)};
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& s : sylls_) {
    int v = (s.gen + 1) * (s.exp > 0 ? 1 : -1);
    for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) out.push_back(v);
  }
  return out;
}

Word Word::from_letters(AlphabetPtr alpha, const std::vector<int>& letters) {
  Word w(std::move(alpha));
  for (int v : letters) {
    if (v == 0) fail(Err::ParseError, "zero letter");
    w.push_reduced(std::abs(v) - 1, v > 0 ? 1 : -1);
  }
  return w;
}

Word Word::cyclic_shift(std::int64_t k) const {
  auto ls = letters();
  if (ls.empty()) return *this;
  std::int64_t n = static_cast<std::int64_t>(ls.size());
  k = ((k % n) + n) % n;
  std::vector<int> rotated(ls.begin() + k, ls.end());
  rotated.insert(rotated.end(), ls.begin(), ls.begin() + k);
  return from_letters(alpha_, rotated);
}

std::vector<std::int64_t> Word::exponent_vector() const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(alpha_ ? alpha_->size() : 0), 0);
  for (const auto& s : sylls_) v[static_cast<std::size_t>(s.gen)] += s.exp;
  return v;
}

bool operator==(const Word& a, const Word& b) {
  if (a.alpha_ && b.alpha_ && !(a.alpha_ == b.alpha_ || *a.alpha_ == *b.alpha_)) return false;
  return a.sylls_ == b.sylls_;
}

bool operator<(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& x = a.sylls_;
  const auto& y = b.sylls_;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i].gen != y[i].gen) return x[i].gen < y[i].gen;
    if (x[i].exp != y[i].exp) return x[i].exp < y[i].exp;
  }
  return x.size() < y.size();
}

std::string Word::key() const {
  std::ostringstream os;
  for (const auto& s : sylls_) os << s.gen << ':' << s.exp << ';';
  return os.str();
}

}  // namespace ordalib
