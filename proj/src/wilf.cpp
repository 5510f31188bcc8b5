#include "circperm/wilf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "circperm/circled1324.hpp"
#include "circperm/grass1432.hpp"
#include "circperm/words1342.hpp"

#ifndef CIRCPERM_DATA_DIR
#define CIRCPERM_DATA_DIR "data/reference"
#endif

namespace circperm {

namespace {

const char* const kSymmetries[] = {"id", "r", "c", "rc"};

int anchor_number(const CircularPermutation& p) {
  for (int a : {1342, 1324, 1432}) {
    if (p == CircularPermutation::parse(std::to_string(a))) return a;
  }
  return 0;
}

BigInt base_count(int anchor, int n) {
  if (n < 1) return 0;
  switch (anchor) {
    case 1342: return pow2(n - 1) - (n - 1);
    case 1324: return n == 1 ? BigInt(1) : fibonacci(2 * n - 4);
    default: return pow2(n) + 1 - 2 * n - binomial(n, 3);
  }
}

template <class F>
auto as_unsupported(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::domain_error& e) {
    throw UnsupportedError(e.what());
  }
}

std::vector<BigInt> encoding_terms(const AnchoredSet& a, int n_max) {
  std::vector<BigInt> terms;
  if (!a.partner) {
    for (int n = 1; n <= n_max; ++n) terms.push_back(base_count(a.anchor, n));
    return terms;
  }
  const CircularPermutation& tau = *a.partner;
  if (a.anchor == 1342) {
    const BinaryWord w = as_unsupported([&] { return w1342::word_of_perm(tau); });
    for (int n = 1; n <= n_max; ++n) terms.push_back(w1342::count_pair_1342(n, w));
  } else if (a.anchor == 1324) {
    const c1324::CircledComposition y = as_unsupported([&] { return c1324::perm_to_comp(tau); });
    for (int n = 1; n <= n_max; ++n) terms.push_back(c1324::count_avoiders_1324(n, y));
  } else {
    const g1432::GrassCode c = as_unsupported([&] { return g1432::classify(tau); });
    for (int n = 1; n <= n_max; ++n) terms.push_back(g1432::count_pair_1432(n, c));
  }
  return terms;
}

std::vector<BigInt> series_terms(const TruncatedSeries& s, int n_max) {
  std::vector<BigInt> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(s[static_cast<std::size_t>(n)]);
  return out;
}

std::vector<BigInt> formula_terms_1342(const CircularPermutation& tau, int n_max) {
  const BinaryWord w = as_unsupported([&] { return w1342::word_of_perm(tau); });
  if (!w1342::has_twin(w)) {
    std::vector<BigInt> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(w1342::closed_nonexceptional_1342(n, static_cast<int>(w.size())));
    return out;
  }
  const int a = w.count(0) - 1, b = w.count(1);
  return series_terms(w1342::gf_exceptional_1342(a, b, n_max), n_max);
}

std::vector<BigInt> formula_terms_1324(const CircularPermutation& tau, int n_max) {
  const auto y = as_unsupported([&] { return c1324::perm_to_comp(tau); });
  std::vector<BigInt> out;
  if (!y.has_uncircled()) {
    if (y.total() != 5) throw UnsupportedError("formula: no closed form for [1324, " + tau.to_string() + "]");
    for (int n = 1; n <= n_max; ++n) out.push_back(c1324::size5_counts_1324(n, "12345:recurrence"));
    return out;
  }
  const TruncatedSeries dom = c1324::gf_dominators(y, n_max);
  for (int n = 1; n <= n_max; ++n) out.push_back(n == 1 ? BigInt(1) : fibonacci(2 * n - 4) - dom[static_cast<std::size_t>(n)]);
  return out;
}

std::vector<BigInt> formula_terms_1432(const CircularPermutation& tau, int n_max) {
  using namespace g1432;
  const GrassCode c = as_unsupported([&] { return classify(tau); });
  const int k = c.size();
  std::vector<BigInt> out;
  if (c.flavor() == Flavor::Identity) {
    for (int n = 1; n <= n_max; ++n) out.push_back(count_pair_identity_1432(n, k));
    return out;
  }
  const GrassCode nf = wilf_normal_form_1432(c);
  if (c == GrassCode::from_g(BinaryWord::parse("0101"))) {
    for (int n = 1; n <= n_max; ++n) out.push_back(1 + binomial(n - 1, 2));
    return out;
  }
  if (k >= 5 && nf == GrassCode::from_g(BinaryWord::alternating(k))) {
    for (int n = 1; n <= n_max; ++n) out.push_back(closed_alt_1432(n, k));
    return out;
  }
  auto matches = [&](const std::string& sel, const std::vector<int>& params) {
    return wilf_normal_form_1432(gf_1432_pattern(sel, params)) == nf;
  };
  if (k >= 4 && matches("010m", {k - 2})) return series_terms(gf_1432_family("010m", {k - 2}, n_max), n_max);
  if (k >= 5 && matches("0101m", {k - 3})) return series_terms(gf_1432_family("0101m", {k - 3}, n_max), n_max);
  for (int ones = 4; ones <= k - 2; ++ones) {
    if (matches("big", {ones, k - ones})) return series_terms(gf_1432_family("big", {ones, k - ones}, n_max), n_max);
  }
  if (k == 5) {
    for (const char* sel : {"13524", "13425", "15234", "12534", "12453", "12354"}) {
      if (wilf_normal_form_1432(classify(CircularPermutation::parse(sel))) == nf) {
        for (int n = 1; n <= n_max; ++n) out.push_back(size5_counts_1432(n, sel));
        return out;
      }
    }
  }
  throw UnsupportedError("formula: no closed form for [1432, " + tau.to_string() + "]");
}

std::vector<BigInt> formula_terms(const AnchoredSet& a, int n_max) {
  if (!a.partner) return encoding_terms(a, n_max);
  if (a.anchor == 1342) return formula_terms_1342(*a.partner, n_max);
  if (a.anchor == 1324) return formula_terms_1324(*a.partner, n_max);
  return formula_terms_1432(*a.partner, n_max);
}

// Key of the structural normal form; equal keys are Wilf equivalent by
// the encoding.
std::string normal_form_key(int anchor, const CircularPermutation& s) {
  switch (anchor) {
    case 1342: return "1342:" + w1342::wilf_normal_form_1342(w1342::word_of_perm(s)).to_string();
    case 1324: return "1324:" + c1324::wilf_normal_form(c1324::perm_to_comp(s)).to_string();
    default: return "1432:" + g1432::wilf_normal_form_1432(g1432::classify(s)).to_string();
  }
}

// Pairs known to be Wilf equivalent to [1342] alone.
bool equivalent_to_1342(int anchor, const CircularPermutation& s) {
  static const std::set<std::string> with1324 = {"12534", "13542", "14523", "15342", "15423"};
  static const std::set<std::string> with1432 = {"13524", "14253"};
  std::string word;
  for (int v : s.word()) word += std::to_string(v);
  if (anchor == 1324) return with1324.count(word) > 0;
  if (anchor == 1432) return with1432.count(word) > 0;
  return false;
}

struct Member {
  int anchor;
  CircularPermutation sigma;
  PatternSet set;
};

WilfClassification group(std::string family, const std::vector<Member>& members, int n_max) {
  WilfClassification out;
  out.family = std::move(family);
  out.evidence_horizon = n_max;
  std::map<std::vector<BigInt>, std::size_t> index;
  std::vector<std::vector<const Member*>> grouped;
  for (const auto& m : members) {
    auto terms = avoidance_sequence(m.set, n_max, Method::Encoding).terms;
    auto [it, fresh] = index.emplace(terms, out.classes.size());
    if (fresh) {
      out.classes.push_back({{}, std::move(terms), false});
      grouped.emplace_back();
    }
    out.classes[it->second].members.push_back(m.set);
    grouped[it->second].push_back(&m);
  }
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    std::set<std::string> keys;
    std::set<int> anchors;
    bool all_1342 = true;
    for (const Member* m : grouped[i]) {
      keys.insert(normal_form_key(m->anchor, m->sigma));
      anchors.insert(m->anchor);
      all_1342 &= equivalent_to_1342(m->anchor, m->sigma);
    }
    out.classes[i].proved = keys.size() == 1 || (anchors.size() > 1 && all_1342);
    if (anchors.size() > 1) ++out.cross_anchor_merges;
  }
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.classes.size(); ++j) {
      const auto& a = out.classes[i].terms;
      const auto& b = out.classes[j].terms;
      std::size_t n = 0;
      while (n < a.size() && a[n] == b[n]) ++n;
      out.witnesses.push_back({i, j, static_cast<int>(n) + 1});
    }
  }
  return out;
}

std::vector<Member> members_for(const CircularPermutation& anchor, int k) {
  const int a = anchor_number(anchor);
  if (a == 0) throw std::invalid_argument("classify_pairs: anchor must be [1342], [1324] or [1432]");
  if (k < 4) throw std::invalid_argument("classify_pairs: k >= 4");
  std::vector<Member> out;
  for (const auto& s : avoiders(k, PatternSet({anchor}))) {
    out.push_back({a, s, PatternSet({anchor, s})});
  }
  return out;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Encoding: return "encoding";
    case Method::Formula: return "formula";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "oracle") return Method::Oracle;
  if (text == "encoding") return Method::Encoding;
  if (text == "formula") return Method::Formula;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

CircularPermutation apply_symmetry(const CircularPermutation& sigma, std::string_view symmetry) {
  if (symmetry == "id") return sigma;
  if (symmetry == "r") return reverse(sigma);
  if (symmetry == "c") return complement(sigma);
  if (symmetry == "rc") return reverse_complement(sigma);
  throw std::invalid_argument("unknown symmetry '" + std::string(symmetry) + "'");
}

AnchoredSet anchor_of(const PatternSet& ps) {
  if (ps.empty() || ps.size() > 2) throw UnsupportedError("encoding: need a size-4 anchor and at most one more pattern");
  const auto& pats = ps.patterns();
  for (std::size_t i = 0; i < pats.size(); ++i) {
    if (pats[i].size() != 4) continue;
    for (const char* sym : kSymmetries) {
      const int a = anchor_number(apply_symmetry(pats[i], sym));
      if (a == 0) continue;
      AnchoredSet out{a, sym, std::nullopt};
      if (pats.size() == 2) out.partner = apply_symmetry(pats[1 - i], sym);
      return out;
    }
  }
  throw UnsupportedError("encoding: no member of {" + ps.key() + "} is a trivial symmetry of [1342], [1324] or [1432]");
}

AvoidanceSequence avoidance_sequence(const PatternSet& ps, int n_max, Method method) {
  AvoidanceSequence out{ps, {}, method};
  if (n_max < 1) return out;
  if (method == Method::Oracle) {
    for (int n = 1; n <= n_max; ++n) out.terms.push_back(avoid_count_oracle(n, ps));
    return out;
  }
  const AnchoredSet a = anchor_of(ps);
  out.terms = method == Method::Encoding ? encoding_terms(a, n_max) : formula_terms(a, n_max);
  return out;
}

std::vector<std::vector<CircularPermutation>> trivial_orbits(int k) {
  if (k < 1) throw std::invalid_argument("trivial_orbits: k >= 1");
  std::set<CircularPermutation> seen;
  std::vector<std::vector<CircularPermutation>> out;
  for_each_circular(k, [&](const CircularPermutation& s) {
    if (seen.count(s)) return;
    std::set<CircularPermutation> orbit;
    for (const char* sym : kSymmetries) orbit.insert(apply_symmetry(s, sym));
    seen.insert(orbit.begin(), orbit.end());
    out.emplace_back(orbit.begin(), orbit.end());
  });
  return out;
}

WilfClassification classify_pairs(const CircularPermutation& anchor, int k, int n_max) {
  return group("[" + std::to_string(anchor_number(anchor)) + "," + std::to_string(k) + "]-pairs", members_for(anchor, k),
               n_max);
}

WilfClassification classify_45_pairs(int n_max) {
  std::vector<Member> all;
  for (const char* a : {"1342", "1324", "1432"}) {
    auto m = members_for(CircularPermutation::parse(a), 5);
    all.insert(all.end(), m.begin(), m.end());
  }
  return group("[4,5]-pairs", all, n_max);
}

std::vector<std::pair<std::string, std::string>> reference_pairs() {
  return {{"1342,12345", "A028387"}, {"1342,12435", "A050407"}, {"1342,12354", "A016789"},
          {"1324,12453", "A027927"}, {"1324,15234", "A000129"}, {"1324,12345", "A210673"},
          {"1324,12354", "A116717"}, {"1324,12534", "A000325"}, {"1432,12435", "A116721"},
          {"1432,15234", "A017401"}};
}

std::string reference_data_dir() {
  if (const char* env = std::getenv("CIRCPERM_DATA_DIR"); env && *env) return env;
  return CIRCPERM_DATA_DIR;
}

ReferenceReport oeis_reference_check(const std::string& pair, int n_max) {
  const auto table = reference_pairs();
  const PatternSet ps = PatternSet::parse(pair);
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return PatternSet::parse(e.first) == ps; });
  if (it == table.end()) throw std::invalid_argument("oeis_reference_check: '" + pair + "' is not a tabulated pair");
  ReferenceReport rep;
  rep.pair = it->first;
  rep.oeis = it->second;
  std::string file = it->first;
  std::replace(file.begin(), file.end(), ',', '_');
  const std::string path = reference_data_dir() + "/" + file + ".b";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("oeis_reference_check: cannot read " + path);
  std::map<int, BigInt> ref;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int n = 0;
    std::string value;
    if (ls >> n >> value) ref[n] = BigInt(value);
  }
  int top = n_max;
  while (top > 0 && !ref.count(top)) --top;
  const auto terms = avoidance_sequence(ps, top, Method::Encoding).terms;
  for (int n = 1; n <= top; ++n) {
    const auto r = ref.find(n);
    if (r == ref.end()) continue;
    ++rep.compared;
    if (terms[static_cast<std::size_t>(n - 1)] != r->second) {
      rep.first_mismatch = n;
      rep.expected = r->second;
      rep.actual = terms[static_cast<std::size_t>(n - 1)];
      break;
    }
  }
  return rep;
}

}  // namespace circperm
