#include "circperm/grass1432.hpp"

#include <algorithm>
#include <stdexcept>

namespace circperm::g1432 {

namespace {

int descents(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

// The word of a Grassmannian permutation that ends in n.
BinaryWord word_of_grassmannian(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::size_t d = 0;
  while (d + 1 < w.size() && w[d] < w[d + 1]) ++d;
  std::string bits(static_cast<std::size_t>(n), '0');
  for (std::size_t p = 0; p <= d; ++p) bits[static_cast<std::size_t>(n - w[p])] = '1';
  return BinaryWord(std::move(bits));
}

bool is_alternating(const std::vector<int>& runs) {
  return std::all_of(runs.begin(), runs.end(), [](int r) { return r == 1; });
}

std::vector<int> reversed_runs(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Identity: return "I";
    case Flavor::E: return "E";
    case Flavor::G: return "G";
    case Flavor::IG: return "IG";
  }
  return "?";
}

LinearPermutation grassmannian(const BinaryWord& w) {
  if (w.empty() || w.first_bit() != 0) throw std::invalid_argument("grassmannian: word must start with 0");
  const int n = static_cast<int>(w.size());
  if (w.run_count() <= 2) return LinearPermutation::identity(n);
  std::vector<int> ones, zeros;
  for (int v = 1; v <= n; ++v) (w[static_cast<std::size_t>(n - v)] ? ones : zeros).push_back(v);
  ones.insert(ones.end(), zeros.begin(), zeros.end());
  return LinearPermutation(std::move(ones));
}

LinearPermutation inverse_grassmannian(const BinaryWord& w) { return grassmannian(w).inverse(); }

BinaryWord gig_swap(const BinaryWord& w) {
  auto runs = w.run_lengths();
  if (runs.size() != 3 && runs.size() != 4) throw std::invalid_argument("gig_swap: word must have 3 or 4 runs");
  std::swap(runs[1], runs[2]);
  return BinaryWord::from_runs(w.first_bit(), runs);
}

GrassCode::GrassCode(BinaryWord word, Flavor flavor) : word_(std::move(word)), flavor_(flavor) {
  if (word_.empty() || word_.first_bit() != 0) throw std::invalid_argument("GrassCode: word must start with 0");
  const int r = word_.run_count();
  const bool ok = flavor_ == Flavor::Identity ? r <= 2 : flavor_ == Flavor::E ? (r == 3 || r == 4) : r >= 5;
  if (!ok) throw std::invalid_argument("GrassCode: " + std::to_string(r) + " runs do not fit flavor " + flavor_name(flavor_));
  if (flavor_ == Flavor::Identity) word_ = BinaryWord::repeat(0, static_cast<int>(word_.size()));
}

GrassCode GrassCode::identity(int n) { return GrassCode(BinaryWord::repeat(0, n), Flavor::Identity); }

GrassCode GrassCode::from_g(const BinaryWord& w) {
  const int r = w.run_count();
  if (r <= 2) return GrassCode(w, Flavor::Identity);
  return GrassCode(w, r <= 4 ? Flavor::E : Flavor::G);
}

GrassCode GrassCode::from_ig(const BinaryWord& w) {
  const int r = w.run_count();
  if (r <= 2) return GrassCode(w, Flavor::Identity);
  if (r <= 4) {
    if (w.first_bit() != 0) throw std::invalid_argument("GrassCode: word must start with 0");
    return GrassCode(gig_swap(w), Flavor::E);
  }
  return GrassCode(w, Flavor::IG);
}

GrassCode GrassCode::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("GrassCode: expected TAG:word in '" + std::string(text) + "'");
  std::string tag(text.substr(0, colon));
  tag.erase(std::remove(tag.begin(), tag.end(), ' '), tag.end());
  const std::string_view rest = text.substr(colon + 1);
  if (tag == "I") {
    std::string digits(rest);
    digits.erase(std::remove(digits.begin(), digits.end(), ' '), digits.end());
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size() || n < 1) throw std::invalid_argument("GrassCode: bad size in '" + std::string(text) + "'");
    return identity(n);
  }
  const BinaryWord w = BinaryWord::parse(rest);
  if (tag == "G" || tag == "E") {
    GrassCode c = from_g(w);
    if (tag == "E" && c.flavor() != Flavor::E) throw std::invalid_argument("GrassCode: E codes have 3 or 4 runs");
    return c;
  }
  if (tag == "IG") return from_ig(w);
  throw std::invalid_argument("GrassCode: unknown tag '" + tag + "'");
}

std::optional<BinaryWord> GrassCode::g_form() const {
  if (flavor_ == Flavor::IG) return std::nullopt;
  return word_;
}

std::optional<BinaryWord> GrassCode::ig_form() const {
  switch (flavor_) {
    case Flavor::Identity:
    case Flavor::IG: return word_;
    case Flavor::E: return gig_swap(word_);
    case Flavor::G: return std::nullopt;
  }
  return std::nullopt;
}

LinearPermutation GrassCode::linear() const {
  return flavor_ == Flavor::IG ? inverse_grassmannian(word_) : grassmannian(word_);
}

CircularPermutation GrassCode::perm() const { return CircularPermutation(linear()); }

std::string GrassCode::to_string() const {
  switch (flavor_) {
    case Flavor::Identity: return "I:" + std::to_string(size());
    case Flavor::E:
    case Flavor::G: return "G:" + word_.to_compact();
    case Flavor::IG: return "IG:" + word_.to_compact();
  }
  return {};
}

GrassCode classify(const CircularPermutation& sigma) {
  const std::vector<int> rot = sigma.rotation_ending_with_max();
  const int d = descents(rot);
  if (d == 0) return GrassCode::identity(sigma.size());
  if (d == 1) return GrassCode::from_g(word_of_grassmannian(rot));
  const std::vector<int> inv = LinearPermutation(rot).inverse().word();
  if (descents(inv) == 1) {
    GrassCode c = GrassCode::from_ig(word_of_grassmannian(inv));
    if (c.flavor() == Flavor::IG) return c;
  }
  throw std::domain_error("classify: " + sigma.to_string() + " contains [1432]");
}

bool g_contains(const BinaryWord& w1, const BinaryWord& w2) {
  return is_subsequence(w1, w2) || is_subsequence(w1, w2.complement());
}

std::vector<BinaryWord> ig_obstructions(const BinaryWord& w2) {
  std::size_t m = 0;
  while (m < w2.size() && w2[w2.size() - 1 - m] == 0) ++m;
  const BinaryWord core = w2.substr(0, w2.size() - m);
  std::vector<BinaryWord> out;
  for (std::size_t i = 0; i <= m; ++i) {
    out.push_back(BinaryWord::repeat(1, static_cast<int>(i)) + core + BinaryWord::repeat(0, static_cast<int>(m - i)));
  }
  return out;
}

bool ig_contains(const BinaryWord& w1, const BinaryWord& w2) {
  for (const auto& v : ig_obstructions(w2)) {
    if (is_subsequence(w1, v)) return true;
  }
  return false;
}

bool contains_1432(const GrassCode& c1, const GrassCode& c2) {
  if (c2.size() > c1.size()) return false;
  if (c2.flavor() == Flavor::Identity) return circular_lis(c1.perm()) >= c2.size();
  if (c1.flavor() == Flavor::Identity) return false;
  const auto g1 = c1.g_form(), g2 = c2.g_form();
  if (g1 && g2 && g_contains(*g1, *g2)) return true;
  const auto i1 = c1.ig_form(), i2 = c2.ig_form();
  return i1 && i2 && ig_contains(*i1, *i2);
}

std::vector<GrassCode> enumerate_av1432(int n) {
  std::vector<GrassCode> out;
  if (n < 1) return out;
  out.push_back(GrassCode::identity(n));
  for (const auto& w : all_words(n)) {
    if (w.first_bit() != 0) break;
    const int r = w.run_count();
    if (r < 3) continue;
    if (r <= 4) {
      out.emplace_back(w, Flavor::E);
    } else {
      out.emplace_back(w, Flavor::G);
      out.emplace_back(w, Flavor::IG);
    }
  }
  return out;
}

BigInt count_pair_1432(int n, const GrassCode& p) {
  if (n < 1) return 0;
  if (p.flavor() == Flavor::Identity) return count_pair_identity_1432(n, p.size());
  BigInt total = 1;  // the identity
  std::vector<BinaryWord> g_forbidden, ig_forbidden;
  if (const auto g = p.g_form()) g_forbidden = {*g, g->complement()};
  if (const auto ig = p.ig_form()) ig_forbidden = ig_obstructions(*ig);
  // E and G hosts in G-form, then IG hosts.
  total += count_words_avoiding(n, g_forbidden, WordFilter{0, 3, -1});
  total += count_words_avoiding(n, ig_forbidden, WordFilter{0, 5, -1});
  return total;
}

BigInt count_pair_identity_1432(int n, int k) {
  if (k < 1) throw std::invalid_argument("count_pair_identity_1432: k >= 1");
  if (n < 1 || n >= 2 * k - 2) return 0;
  BigInt r = 0;
  for (const auto& c : enumerate_av1432(n)) {
    if (circular_lis(c.perm()) < k) r += 1;
  }
  return r;
}

BigInt closed_alt_1432(int n, int k) {
  if (k < 5) throw std::invalid_argument("closed_alt_1432: k >= 5");
  if (n < 5) return count_pair_1432(n, GrassCode::from_g(BinaryWord::alternating(k)));
  BigInt r = pow2(n - 1) - (n - 1);
  for (int i = 4; i <= k - 2; ++i) r += binomial(n - 1, i);
  return r;
}

GrassCode wilf_normal_form_1432(const GrassCode& p) {
  const int n = p.size();
  switch (p.flavor()) {
    case Flavor::Identity: return p;
    case Flavor::E:
    case Flavor::G: {
      std::vector<int> c = p.word().run_lengths();
      if (c.size() == 3) return c[0] >= c[2] ? p : GrassCode::from_g(BinaryWord::B({c[2], c[1], c[0]}));
      if (is_alternating(c)) return p;
      while (c.front() == 1) {
        c.erase(c.begin());
        c.push_back(1);
      }
      std::size_t core = c.size();
      while (c[core - 1] == 1) --core;
      std::vector<int> head(c.begin(), c.begin() + static_cast<long>(core));
      const std::vector<int> rev = reversed_runs(head);
      if (rev > head) std::copy(rev.begin(), rev.end(), c.begin());
      return GrassCode::from_g(BinaryWord::B(c));
    }
    case Flavor::IG: {
      std::vector<int> c = p.word().run_lengths();
      if (p.word().last_bit() == 1 || is_alternating(c)) return GrassCode::from_g(BinaryWord::alternating(n));
      std::vector<int> head(c.begin(), c.end() - 1);
      const std::vector<int> rev = reversed_runs(head);
      if (rev > head) std::copy(rev.begin(), rev.end(), c.begin());
      return GrassCode::from_ig(BinaryWord::B(c));
    }
  }
  return p;
}

int reduced_shape_1432(const GrassCode& p) {
  const std::vector<int> c = p.word().run_lengths();
  switch (p.flavor()) {
    case Flavor::Identity: return 0;
    case Flavor::E:
    case Flavor::G: {
      if (c.size() == 3) return c[0] >= c[2] ? 1 : 0;
      if (is_alternating(c)) return 2;
      std::size_t core = c.size();
      while (c[core - 1] == 1) --core;
      const std::vector<int> head(c.begin(), c.begin() + static_cast<long>(core));
      return c.front() != 1 && reversed_runs(head) <= head ? 3 : 0;
    }
    case Flavor::IG: {
      if (p.word().last_bit() != 0 || is_alternating(c)) return 0;
      const std::vector<int> head(c.begin(), c.end() - 1);
      return reversed_runs(head) <= head ? 4 : 0;
    }
  }
  return 0;
}

namespace {

// sum_{i=0}^{m-2} sum_{j=0}^{m-1} C(i+j, i) x^{i+j+1}
TruncatedSeries double_binomial(std::size_t order, int m) {
  TruncatedSeries s(order);
  for (int i = 0; i <= m - 2; ++i) {
    for (int j = 0; j <= m - 1; ++j) {
      if (static_cast<std::size_t>(i + j + 1) <= order) s[static_cast<std::size_t>(i + j + 1)] += binomial(i + j, i);
    }
  }
  return s;
}

void require_params(const std::string& selector, const std::vector<int>& params, std::size_t count, int m_min) {
  if (params.size() != count) throw std::invalid_argument("gf_1432_family: wrong parameter count for '" + selector + "'");
  if (params.back() < m_min) throw std::invalid_argument("gf_1432_family: m must be at least 2");
}

}  // namespace

GrassCode gf_1432_pattern(const std::string& selector, const std::vector<int>& params) {
  if (selector == "big") {
    require_params(selector, params, 2, 2);
    if (params[0] < 4) throw std::invalid_argument("gf_1432_family: big needs k >= 4");
    std::vector<int> c(static_cast<std::size_t>(params[0]), 1);
    c.push_back(params[1]);
    return GrassCode::from_g(BinaryWord::B(c));
  }
  if (selector == "0101m") {
    require_params(selector, params, 1, 2);
    return GrassCode::from_g(BinaryWord::B({1, 1, 1, params[0]}));
  }
  if (selector == "010m") {
    require_params(selector, params, 1, 2);
    return GrassCode::from_g(BinaryWord::B({1, 1, params[0]}));
  }
  throw std::invalid_argument("gf_1432_family: unknown selector '" + selector + "'");
}

TruncatedSeries gf_1432_family(const std::string& selector, const std::vector<int>& params, int order) {
  gf_1432_pattern(selector, params);  // validates
  if (order < 1) throw std::invalid_argument("gf_1432_family: order >= 1");
  const std::size_t N = static_cast<std::size_t>(order);
  const TruncatedSeries one = TruncatedSeries::constant(N, 1);
  const TruncatedSeries x = TruncatedSeries::monomial(N, 1, 1);
  const TruncatedSeries y = TruncatedSeries::t_over_one_minus_t(N);
  const TruncatedSeries inv1mx = TruncatedSeries::geometric(N, 1);
  const int m = params.back();
  const TruncatedSeries dd = double_binomial(N, m);

  if (selector == "big") {
    const int k = params[0];
    TruncatedSeries r = TruncatedSeries::polynomial(N, {0, 1, -3, 3}) * TruncatedSeries::polynomial(N, {1, -4, 5, -2}).inverse();
    r += y.pow(static_cast<unsigned>(k)) * dd;
    for (int i = 5; i <= k; ++i) r += y.pow(static_cast<unsigned>(i));
    return r;
  }
  if (selector == "0101m") {
    TruncatedSeries inner = one + dd;
    for (int j = 0; j <= m - 2; ++j) inner += y.pow(static_cast<unsigned>(j + 1)) - x.pow(static_cast<unsigned>(j + 1));
    return y + y.pow(3) * inner;
  }
  TruncatedSeries a = one;
  for (int i = 0; i <= m - 2; ++i) {
    a += (inv1mx.pow(static_cast<unsigned>(m - i - 1)) - one).shifted(m + i);
    a += y.pow(static_cast<unsigned>(i + 1)) - x.pow(static_cast<unsigned>(i + 1));
  }
  TruncatedSeries b = x * (x.pow(static_cast<unsigned>(m)) - one) * (one - x.pow(static_cast<unsigned>(m - 1))) * inv1mx.pow(2) + dd;
  return y * a + y.pow(2) * b;
}

BigInt size5_counts_1432(int n, const std::string& selector) {
  // [13542] itself contains [1432]; the pair meant is [1432,13524].
  const std::string which = selector == "13542" ? "13524" : selector;
  struct Entry {
    const char* name;
    int from;
  };
  static const Entry table[] = {{"12345", 8}, {"13524", 5}, {"13425", 4}, {"15234", 6},
                                {"12534", 6}, {"12453", 6}, {"12354", 6}};
  const auto it = std::find_if(std::begin(table), std::end(table), [&](const Entry& e) { return which == e.name; });
  if (it == std::end(table)) throw std::invalid_argument("size5_counts_1432: unknown selector '" + selector + "'");
  if (n < it->from) {
    if (which == "12345") return count_pair_identity_1432(n, 5);
    return count_pair_1432(n, classify(CircularPermutation::parse(which)));
  }
  if (which == "12345") return 0;
  if (which == "13524") return pow2(n - 1) - (n - 1);
  if (which == "13425") return 1 + binomial(n, 3) + binomial(n - 3, 2);
  if (which == "15234") return BigInt(11 * n - 43);
  if (which == "12534") return BigInt(8 * n - 31) + binomial(n - 2, 2);
  if (which == "12453") return BigInt(10 * n - 39) + binomial(n - 3, 2);
  return BigInt(9 * n - 34) + binomial(n - 4, 2) + binomial(n - 3, 2);
}

std::vector<BigInt> descent_poly_1432(int n) {
  if (n < 1) throw std::invalid_argument("descent_poly_1432: n >= 1");
  if (n == 1) return {1};
  std::vector<BigInt> c(static_cast<std::size_t>(n), 0);
  c[1] = 1;
  if (n >= 3) c[2] = pow2(n - 1) - n;
  for (int j = 3; 2 * j - 1 <= n; ++j) c[static_cast<std::size_t>(j)] = binomial(n, 2 * j - 1);
  return c;
}

}  // namespace circperm::g1432
