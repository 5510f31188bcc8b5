#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/bigint.hpp"
#include "circperm/permutation.hpp"

namespace circperm {

enum class Method { Oracle, Encoding, Formula };

std::string method_name(Method m);
// "oracle", "encoding" or "formula".
Method parse_method(std::string_view text);

// Raised when a pattern set cannot be handled by the requested method.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AvoidanceSequence {
  PatternSet patterns;
  std::vector<BigInt> terms;  // terms[i] = #Av_{i+1}
  Method method = Method::Oracle;
};

// The symmetry among {id, r, c, rc} that carries one member of ps onto
// [1342], [1324] or [1432], with the rest of ps carried along.
struct AnchoredSet {
  int anchor = 0;                                // 1342, 1324 or 1432
  std::string symmetry;                          // "id", "r", "c" or "rc"
  std::optional<CircularPermutation> partner;   // image of the other member
};
// Throws UnsupportedError unless ps is a size-4 anchor plus at most one
// further pattern.
AnchoredSet anchor_of(const PatternSet& ps);

CircularPermutation apply_symmetry(const CircularPermutation& sigma, std::string_view symmetry);

// Terms n = 1..n_max.  Encoding and formula methods throw UnsupportedError
// for pattern sets outside their reach.
AvoidanceSequence avoidance_sequence(const PatternSet& ps, int n_max, Method method);

// Orbits of size-k circular permutations under reverse and complement,
// each sorted, ordered by their least member.
std::vector<std::vector<CircularPermutation>> trivial_orbits(int k);

struct WilfClass {
  std::vector<PatternSet> members;
  std::vector<BigInt> terms;  // shared avoidance sequence up to the horizon
  // True when every member has the same normal form under its anchor's
  // encoding, so the equivalences hold for every n.
  bool proved = false;
};

struct SeparationWitness {
  std::size_t first = 0, second = 0;  // class indices
  int n = 0;                          // least n where the counts differ
};

struct WilfClassification {
  std::string family;
  std::vector<WilfClass> classes;
  int evidence_horizon = 0;
  std::vector<SeparationWitness> witnesses;
  // Classes whose members come from more than one anchor.
  int cross_anchor_merges = 0;
};

// All pairs [anchor, s] with s in Av_k[anchor], grouped by avoidance
// sequence up to n_max.  Sequences come from the encoding DPs.
WilfClassification classify_pairs(const CircularPermutation& anchor, int k, int n_max);
// The three anchors together, for k = 5.
WilfClassification classify_45_pairs(int n_max);

struct ReferenceReport {
  std::string pair;
  std::string oeis;
  int compared = 0;
  std::optional<int> first_mismatch;  // n of the first differing term
  BigInt expected, actual;            // values at the mismatch
  bool ok() const { return !first_mismatch && compared > 0; }
};

// The ten tabulated [4,5]-pairs, as pattern-set keys such as "1342,12345".
std::vector<std::pair<std::string, std::string>> reference_pairs();
// Compares encoding counts for n <= n_max with the bundled reference
// terms.  The data directory defaults to the build-time location and can
// be overridden with CIRCPERM_DATA_DIR.  Throws std::invalid_argument for
// a pair outside the table.
ReferenceReport oeis_reference_check(const std::string& pair, int n_max);
std::string reference_data_dir();

}  // namespace circperm
