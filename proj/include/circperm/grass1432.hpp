#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/bigint.hpp"
#include "circperm/binary_word.hpp"
#include "circperm/permutation.hpp"
#include "circperm/series.hpp"

// Av[1432] through Grassmannian codes.  Rotated to end with n, every
// member is the identity, a Grassmannian permutation G(w) or an inverse
// Grassmannian permutation IG(w), for a binary word w starting with 0.
namespace circperm::g1432 {

enum class Flavor { Identity, E, G, IG };

std::string flavor_name(Flavor f);

// In G(w), w_i = 1 exactly when the value n-i+1 sits before the descent.
// Words with at most two runs give the identity.  Throws
// std::invalid_argument for an empty word or one starting with 1.
LinearPermutation grassmannian(const BinaryWord& w);
LinearPermutation inverse_grassmannian(const BinaryWord& w);

// Swaps the second and third runs of a word with 3 or 4 runs, so that
// G(w) = IG(gig_swap(w)).
BinaryWord gig_swap(const BinaryWord& w);

class GrassCode {
 public:
  GrassCode() = default;
  // Checks the run count against the flavor: Identity <= 2, E 3 or 4
  // (given in G-form), G and IG >= 5.
  GrassCode(BinaryWord word, Flavor flavor);

  static GrassCode identity(int n);
  static GrassCode from_g(const BinaryWord& w);
  static GrassCode from_ig(const BinaryWord& w);
  // "I:5", "G:0^2 1^2 0 1^3", "IG:0 1 0 1 0^2", "E:..." (G-form).
  static GrassCode parse(std::string_view text);

  Flavor flavor() const { return flavor_; }
  const BinaryWord& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }

  // Word w with perm() = [G(w)] (Identity, E, G) or [IG(w)] (Identity, E, IG).
  std::optional<BinaryWord> g_form() const;
  std::optional<BinaryWord> ig_form() const;

  LinearPermutation linear() const;
  CircularPermutation perm() const;
  std::string to_string() const;

  friend auto operator<=>(const GrassCode&, const GrassCode&) = default;

 private:
  BinaryWord word_;
  Flavor flavor_ = Flavor::Identity;
};

// Throws std::domain_error if sigma contains [1432].
GrassCode classify(const CircularPermutation& sigma);

// [G(w1)] contains [G(w2)]: w2 or its complement is a subsequence of w1.
bool g_contains(const BinaryWord& w1, const BinaryWord& w2);
// [IG(w1)] contains [IG(w2)]: with w2 = u 0^m and u ending in 1 (or
// empty), some 1^i u 0^{m-i} is a subsequence of w1.
bool ig_contains(const BinaryWord& w1, const BinaryWord& w2);
// The words 1^i u 0^{m-i} above.
std::vector<BinaryWord> ig_obstructions(const BinaryWord& w2);

// Whether [c1.perm()] contains [c2.perm()].
bool contains_1432(const GrassCode& c1, const GrassCode& c2);

// Identity first, then 0-leading words of length n with at least three
// runs in lexicographic order, each as E, or as G followed by IG.
std::vector<GrassCode> enumerate_av1432(int n);

// #Av_n[1432, p.perm()], summed over the four types.
BigInt count_pair_1432(int n, const GrassCode& p);
// #Av_n[1432, iota_k]; zero once n >= 2k-2.
BigInt count_pair_identity_1432(int n, int k);
// #Av_n[1432, G(alternating word of length k)], k >= 5; closed form for n >= 5.
BigInt closed_alt_1432(int n, int k);

// Representative of the Wilf class of [1432, p] of one of four shapes:
// 1. G(0^a 1^b 0^c) with a >= c;
// 2. G(u), u alternating with at least four runs;
// 3. G(B(n_1..n_k, 1^r)) with n_1, n_k != 1 and reversed run sizes <=lex;
// 4. IG(B(n_1..n_k, m)) ending in 0, not alternating, reversed <=lex.
GrassCode wilf_normal_form_1432(const GrassCode& p);
// 0 for the identity or a code of no shape, else the shape number.
int reduced_shape_1432(const GrassCode& p);

// Generating functions of #Av_n[1432, G(B(c))]:
//   "big"   params {k, m}: c has k parts 1 and one part m (k >= 4, m >= 2);
//   "0101m" params {m}: c = (1, 1, 1, m);
//   "010m"  params {m}: c = (1, 1, m).
TruncatedSeries gf_1432_family(const std::string& selector, const std::vector<int>& params, int order);
// The code G(B(c)) that a selector describes.
GrassCode gf_1432_pattern(const std::string& selector, const std::vector<int>& params);

// Closed forms for [1432, s], s of size 5.  Selectors "12345", "13524"
// (alias "13542"), "13425", "15234", "12534", "12453", "12354".  Below
// the range where the formula holds the DP count is returned.
BigInt size5_counts_1432(int n, const std::string& which);

// Coefficients of D_n([1432]; q).
std::vector<BigInt> descent_poly_1432(int n);

}  // namespace circperm::g1432
