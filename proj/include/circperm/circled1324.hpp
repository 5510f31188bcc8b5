#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/bigint.hpp"
#include "circperm/permutation.hpp"
#include "circperm/series.hpp"

// Av[1324] as circled compositions: compositions whose first and last
// parts are circled 1s, written e.g. "(1)^2 2 1 (1)^2 3 (1)".
namespace circperm::c1324 {

struct Part {
  int value = 1;
  bool circled = false;
  friend auto operator<=>(const Part&, const Part&) = default;
};

class CircledComposition {
 public:
  CircledComposition() = default;
  // Throws std::invalid_argument unless the ends are circled, circled
  // parts equal 1 and the total is at least 2.
  explicit CircledComposition(std::vector<Part> parts);

  // Accepts "(1)" or "①" for a circled part and "^k" for repetition.
  static CircledComposition parse(std::string_view text);
  static CircledComposition all_circled(int n);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int total() const;
  int uncircled_count() const;
  bool has_uncircled() const { return uncircled_count() > 0; }
  // Lengths of the leading and trailing circled strings.
  int leading_circled() const;
  int trailing_circled() const;

  CircledComposition reversed() const;
  std::string to_string() const;

  friend auto operator<=>(const CircledComposition&, const CircledComposition&) = default;

 private:
  std::vector<Part> parts_;
};

// The permutation with all runs contiguous whose runs, read right to left,
// have sizes c_1, c_2, ...; the values 1..c_1 form the last run.
LinearPermutation contiguous_perm(const std::vector<int>& c);

// The permutation written as rho 1 tau n, e.g. 8 9 10 5 3 4 1 2 6 7 11.
LinearPermutation comp_to_linear(const CircledComposition& x);
CircularPermutation comp_to_perm(const CircledComposition& x);
// Throws std::domain_error if sigma contains [1324].
CircledComposition perm_to_comp(const CircularPermutation& sigma);

// Whether [comp_to_perm(x)] contains [comp_to_perm(y)].
bool dominates(const CircledComposition& x, const CircledComposition& y);

// All circled compositions of n (n >= 2); F_{2n-4} of them.
std::vector<CircledComposition> enumerate_circled(int n);

// Number of circled compositions of n dominating y, by a DP over the
// parts of the host.  Works for every y, including all-circled ones.
BigInt count_dominators(int n, const CircledComposition& y);
// #Av_n[1324, comp_to_perm(y)].
BigInt count_avoiders_1324(int n, const CircledComposition& y);

// Uncircled parts sorted in decreasing order, interior circled parts
// merged and placed before the last uncircled part, and the longer end
// string of circled parts put first.
CircledComposition standard_form(const CircledComposition& x);
// A Wilf-equivalent composition of one of the three reduced shapes.
CircledComposition wilf_normal_form(const CircledComposition& x);
// 0 if x is not of a reduced shape, else the shape number 1, 2 or 3.
int reduced_shape(const CircledComposition& x);

// Generating function of the dominators of x.  x must contain an
// uncircled part.
TruncatedSeries gf_dominators(const CircledComposition& x, int order);

// Circled compositions of n with i uncircled parts: C(n+i-2, 2i).
BigInt count_by_uncircled(int n, int i);

// #Av_n[1324, delta_{k+2}].
BigInt closed_delta_1324(int n, int k);
// #Av_n[1324, comp_to_perm((1) k (1))] via its linear recurrence.
BigInt recur_1k1(int n, int k);

// Selectors: "15432", "15234", "12345", "12345:recurrence", "12354",
// "12354:closed", "13542".
BigInt size5_counts_1324(int n, const std::string& which);

// Coefficients of D_n([1324]; q).
std::vector<BigInt> descent_poly_1324(int n);

}  // namespace circperm::c1324
