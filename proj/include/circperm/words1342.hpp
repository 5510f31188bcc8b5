#pragma once

#include <string>
#include <utility>
#include <vector>

#include "circperm/binary_word.hpp"
#include "circperm/bigint.hpp"
#include "circperm/permutation.hpp"
#include "circperm/series.hpp"

// Av[1342] as binary words.  A word w of length n-1 builds sigma(w) by
// taking, at each step, the smallest (bit 0) or largest (bit 1) unused
// value.  Distinct words give distinct circular classes except that
// 0^{a+1}1^b and 1^{b+1}0^a coincide; the 0-leading one is canonical.
namespace circperm::w1342 {

// The empty word gives the size-1 permutation.
LinearPermutation sigma_of_word(const BinaryWord& w);

// Nonempty with at most two runs, i.e. has an exceptional twin.
bool has_twin(const BinaryWord& w);
// Canonical exceptional: at most two runs and leading 0.
bool is_exceptional(const BinaryWord& w);
bool is_canonical(const BinaryWord& w);
// Maps 1^{b+1}0^a to 0^{a+1}1^b; every other word is returned unchanged.
BinaryWord canonical_word(const BinaryWord& w);
// For w with at most two runs: {0^{a+1}1^b, 1^{b+1}0^a}.
std::pair<BinaryWord, BinaryWord> exceptional_pair(const BinaryWord& w);

// Throws std::domain_error if sigma contains [1342].
BinaryWord word_of_perm(const CircularPermutation& sigma);

// Whether [sigma(w)] contains [sigma(p)].
bool word_contains(const BinaryWord& w, const BinaryWord& p);

// Canonical words of length n-1, lexicographic.
std::vector<BinaryWord> enumerate_av1342(int n);

// #Av_n[1342, sigma(p)].
BigInt count_pair_1342(int n, const BinaryWord& p);

// #Av_n[1342, iota_{k+1}] (pattern word 0^k); closed form for n-1 >= k.
BigInt closed_iota_1342(int n, int k);
// #Av_n[1342, sigma(w)] for non-exceptional w of length k; closed form for n-1 >= k.
BigInt closed_nonexceptional_1342(int n, int k);

// sum_n #Av_n[1342, sigma(0^{a+1}1^b)] t^n, truncated at t^order.
TruncatedSeries gf_exceptional_1342(int a, int b, int order);
// sum_n #Av_n[1342, sigma(w)] t^n for non-exceptional w of length k.
TruncatedSeries gf_nonexceptional_1342(int k, int order);

// Binary words of length n avoiding p as a subsequence, which equals
// #Av_{n+1}(213, 231, sigma(p)) for linear permutations.
BigInt count_linear_triple(int n, const BinaryWord& p);

// cdes[sigma(w)] read directly off the word.
int cdes_from_word(const BinaryWord& w);

// Coefficients of D_n([1342]; q) from the closed form.
std::vector<BigInt> descent_poly_1342(int n);

// Representative of the Wilf class of [1342, sigma(p)]: the alternating
// word for non-exceptional p, otherwise 0^{a+1}1^b with a >= b.
BinaryWord wilf_normal_form_1342(const BinaryWord& p);

// Closed forms for the pairs [1342, s] with s of size 5.  Selectors:
// "12345" (n >= 5), "12435" (the non-exceptional class, n >= 5),
// "12354" (n >= 6).  Outside the stated range the DP count is returned.
BigInt size5_counts_1342(int n, const std::string& which);

}  // namespace circperm::w1342
