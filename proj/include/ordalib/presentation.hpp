// Finitely presented groups: abelian invariants, bounded coset enumeration,
// relator-consequence generation with replayable certificates, and the
// built-in catalog of example groups.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordalib/matrix.hpp"
#include "ordalib/word.hpp"

namespace ordalib {

class Presentation {
 public:
  Presentation() = default;
  Presentation(AlphabetPtr alpha, std::vector<Word> relators);

  // Text format: `gens: a b ; rels: a^2*b*a^2*b^-1 , b^2*a*b^2*a^-1`
  static Presentation parse(const std::string& text);
  std::string format() const;

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Word>& relators() const { return relators_; }
  int generator_count() const { return alpha_->size(); }

 private:
  AlphabetPtr alpha_;
  std::vector<Word> relators_;  // freely and cyclically reduced
};

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;  // divisor chain, each > 1

  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::optional<Int> order() const;  // group order when finite
  std::string str() const;
};

AbelianInvariants abelianization(const Presentation& p);
IntMatrix relator_matrix(const Presentation& p);

struct CosetResult {
  bool exceeded = false;
  long long order = 0;  // valid when !exceeded

  static CosetResult bound_exceeded() { return CosetResult{true, 0}; }
  static CosetResult finite(long long n) { return CosetResult{false, n}; }
};

// Todd-Coxeter over the trivial subgroup; HLT strategy, cosets numbered by
// first definition.  ExceededBound is reported as a value.
CosetResult coset_enumeration(const Presentation& p, long long max_cosets);

// A product of conjugated relator powers certifying that a word is trivial.
struct RelatorFactor {
  Word conjugator;
  int relator = 0;
  int sign = 1;
};
using RewriteCertificate = std::vector<RelatorFactor>;

// The certified element: conj * relator^sign * conj^{-1}, all factors multiplied.
Word certificate_element(const Presentation& p, const RewriteCertificate& cert);

// Replays the certificate against w: appending the inverted factors and freely
// reducing must end in the empty word.
bool replay_certificate(const Presentation& p, const Word& w, const RewriteCertificate& cert);

struct Consequence {
  Word word;
  RewriteCertificate certificate;
  int generation = 0;
};

// Relator consequences: cyclic permutations, inverses, generator conjugates
// and pairwise products, deduplicated, with certificates.
std::vector<Consequence> consequences(const Presentation& p, std::int64_t max_len, int max_count,
                                      int max_generation = 2);

// --- catalog ---------------------------------------------------------------

struct RefutationHint {
  std::vector<int> signs;           // one per word of the X list
  std::vector<int> witness;         // indices into X; product of X[i]^{signs[i]}
  RewriteCertificate certificate;   // triviality proof of the witness product
};

struct ExpectedFacts {
  std::optional<AbelianInvariants> abelianization;
  std::optional<long long> order;          // finite group order
  std::optional<int> lo_count;             // number of left-orderings
  std::optional<bool> complete;            // presentation is complete as printed
  std::optional<bool> left_orderable;
};

enum class OracleKind { FreeGroup, FreeAbelian, KleinBottle, AffineCrystallographic, Braid, BoundedRewriting };

struct CatalogEntry {
  std::string name;
  Presentation presentation;
  OracleKind oracle_hint = OracleKind::BoundedRewriting;
  ExpectedFacts expected;
  std::vector<Word> sign_test_words;     // default X for the semigroup sign test
  std::vector<RefutationHint> hints;     // hinted witnesses, when search is impractical
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_lookup(const std::string& name);

// Parameterized families used by the catalog and tests.
Presentation presentation_klein_xy();
Presentation presentation_klein_ab();
Presentation presentation_trefoil();
Presentation presentation_torus_knot(int p, int q);
Presentation presentation_crystallographic();
Presentation presentation_weeks();
Presentation presentation_sigma237();
Presentation presentation_poincare();
Presentation presentation_gphi(int p, int q, int r, int s);
Presentation presentation_sigma_n_41(int n);
Presentation presentation_braid(int n);

}  // namespace ordalib
