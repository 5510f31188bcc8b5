#pragma once

#include <string>
#include <vector>

// Exhaustive cross-checks of the encodings against the brute-force
// oracle, shared by the CLI and the acceptance suite.
namespace circperm::checks {

struct CheckResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> samples;  // first few failures

  bool ok() const { return failed == 0 && checked > 0; }
  void expect(bool cond, const std::string& what);
};

// Oracle counts of Av_n[1342], Av_n[1324], Av_n[1432] against their formulas.
CheckResult base_counts(int n_lo, int n_hi);

// Encoded containment against contains_circular, for hosts up to size
// max_host and patterns up to size max_pattern.
CheckResult faithfulness_1342(int max_host, int max_pattern);
CheckResult faithfulness_1324(int max_host, int max_pattern);
CheckResult faithfulness_1432(int max_host, int max_pattern);

// Encode, decode, compare; also checks that the encoded objects are
// distinct avoiders of the expected number.  For sizes up to oracle_n the
// oracle's avoiders are decoded and re-encoded too.
CheckResult roundtrip_1342(int max_word_length, int oracle_n);
CheckResult roundtrip_1324(int max_total, int oracle_n);
CheckResult roundtrip_1432(int max_size, int oracle_n);

// Closed-form D_n against the oracle for each anchor.
CheckResult descents(int max_n);

}  // namespace circperm::checks
