#include "circperm/circled1324.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "text_util.hpp"

namespace circperm::c1324 {

namespace {

constexpr Part kCircled{1, true};

}  // namespace

CircledComposition::CircledComposition(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2 || !parts_.front().circled || !parts_.back().circled) {
    throw std::invalid_argument("circled composition must start and end with a circled 1");
  }
  for (const Part& p : parts_) {
    if (p.value < 1) throw std::invalid_argument("circled composition parts must be positive");
    if (p.circled && p.value != 1) throw std::invalid_argument("circled parts must equal 1");
  }
}

CircledComposition CircledComposition::parse(std::string_view text) {
  std::vector<Part> parts;
  std::size_t i = 0;
  const std::string_view s = text;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == ',') {
      ++i;
      continue;
    }
    Part p;
    if (s.substr(i, 3) == "(1)") {
      p = kCircled;
      i += 3;
    } else if (s.substr(i, 3) == "\xE2\x91\xA0") {  // ①
      p = kCircled;
      i += 3;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      p = Part{std::stoi(std::string(s.substr(i, j - i))), false};
      i = j;
    } else {
      throw std::invalid_argument("bad circled composition '" + std::string(text) + "'");
    }
    const long rep = detail::read_exponent(s, i);
    if (rep < 0) throw std::invalid_argument("missing exponent in '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(rep), p);
  }
  return CircledComposition(std::move(parts));
}

CircledComposition CircledComposition::all_circled(int n) {
  return CircledComposition(std::vector<Part>(static_cast<std::size_t>(std::max(n, 0)), kCircled));
}

int CircledComposition::total() const {
  int t = 0;
  for (const Part& p : parts_) t += p.value;
  return t;
}

int CircledComposition::uncircled_count() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](const Part& p) { return !p.circled; }));
}

int CircledComposition::leading_circled() const {
  int r = 0;
  while (r < static_cast<int>(parts_.size()) && parts_[r].circled) ++r;
  return r;
}

int CircledComposition::trailing_circled() const {
  int s = 0;
  while (s < static_cast<int>(parts_.size()) && parts_[parts_.size() - 1 - s].circled) ++s;
  return s;
}

CircledComposition CircledComposition::reversed() const {
  return CircledComposition(std::vector<Part>(parts_.rbegin(), parts_.rend()));
}

std::string CircledComposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    if (!out.empty()) out += ' ';
    if (!parts_[i].circled) {
      out += std::to_string(parts_[i].value);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < parts_.size() && parts_[j].circled) ++j;
    out += "(1)";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

LinearPermutation contiguous_perm(const std::vector<int>& c) {
  if (c.empty()) throw std::invalid_argument("contiguous_perm: empty composition");
  std::vector<int> start(c.size());
  int v = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) throw std::invalid_argument("contiguous_perm: parts must be positive");
    start[i] = v;
    v += c[i];
  }
  std::vector<int> w;
  for (std::size_t i = c.size(); i-- > 0;) {
    for (int k = 0; k < c[i]; ++k) w.push_back(start[i] + k);
  }
  return LinearPermutation(std::move(w));
}

LinearPermutation comp_to_linear(const CircledComposition& x) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> circled;
  int v = 1;
  for (const Part& p : x.parts()) {
    if (p.circled) {
      circled.push_back(v++);
    } else {
      blocks.emplace_back();
      for (int k = 0; k < p.value; ++k) blocks.back().push_back(v++);
    }
  }
  std::vector<int> w;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  w.insert(w.end(), circled.begin(), circled.end());
  return LinearPermutation(std::move(w));
}

CircularPermutation comp_to_perm(const CircledComposition& x) { return CircularPermutation(comp_to_linear(x)); }

CircledComposition perm_to_comp(const CircularPermutation& sigma) {
  const int n = sigma.size();
  if (n < 2) throw std::domain_error("perm_to_comp: circled compositions have total >= 2");
  const std::vector<int> w = sigma.rotation_ending_with_max();  // rho 1 tau n
  const int one = static_cast<int>(std::find(w.begin(), w.end(), 1) - w.begin());
  auto fail = [&] { return std::domain_error("perm_to_comp: " + sigma.to_string() + " contains [1324]"); };

  std::vector<bool> circled(n + 1, false);
  for (int i = one; i < n; ++i) {
    if (i > one && w[i] < w[i - 1]) throw fail();
    circled[w[i]] = true;
  }
  // Runs of rho, each of which must be an interval of values.
  std::vector<int> run_len(n + 1, 0);  // indexed by the run's smallest value
  for (int i = 0; i < one;) {
    int j = i + 1;
    while (j < one && w[j] == w[j - 1] + 1) ++j;
    if (j < one && w[j] > w[j - 1]) throw fail();
    run_len[w[i]] = j - i;
    i = j;
  }
  std::vector<Part> parts;
  for (int v = 1; v <= n;) {
    if (circled[v]) {
      parts.push_back(kCircled);
      ++v;
    } else if (run_len[v] > 0) {
      parts.push_back(Part{run_len[v], false});
      v += run_len[v];
    } else {
      throw fail();
    }
  }
  CircledComposition x(std::move(parts));
  if (comp_to_perm(x) != sigma) throw fail();
  return x;
}

bool dominates(const CircledComposition& x, const CircledComposition& y) {
  const auto& X = x.parts();
  const auto& Y = y.parts();
  const int p = static_cast<int>(X.size());
  const int q = static_cast<int>(Y.size());
  if (y.total() > x.total()) return false;
  std::vector<bool> tail_circled(q + 1, true);
  for (int j = q - 1; j >= 0; --j) tail_circled[j] = tail_circled[j + 1] && Y[j].circled;
  const int lead = y.leading_circled();

  // memo[(i * (q + 1) + j) * 2 + started]: -1 unknown, 0 false, 1 true
  std::vector<std::int8_t> memo(static_cast<std::size_t>(p + 1) * (q + 1) * 2, -1);
  auto rec = [&](auto&& self, int i, int j, bool started) -> bool {
    if (started && j == q) return true;
    if (i == p) return false;
    std::int8_t& m = memo[(static_cast<std::size_t>(i) * (q + 1) + j) * 2 + started];
    if (m >= 0) return m;
    bool ok = self(self, i + 1, j, started);
    const Part& xp = X[i];
    if (!ok && !started) {
      if (xp.circled) {
        ok = self(self, i + 1, 1, true);  // Y[0] is always circled
      } else {
        // An uncircled part may stand for the first v circled parts of Y,
        // or for all of Y when Y is entirely circled.
        if (tail_circled[0] && q <= xp.value) ok = true;
        for (int v = 1; !ok && v <= std::min(xp.value, lead); ++v) ok = self(self, i + 1, v, true);
      }
    } else if (!ok && j < q) {
      const Part& yp = Y[j];
      if (xp.circled && yp.circled) ok = self(self, i + 1, j + 1, true);
      if (!ok && !xp.circled && !yp.circled && yp.value <= xp.value) ok = self(self, i + 1, j + 1, true);
      if (!ok && !xp.circled && tail_circled[j] && q - j <= xp.value) ok = true;
    }
    m = ok;
    return ok;
  };
  return rec(rec, 0, 0, false);
}

namespace {

void middles(int m, std::vector<Part>& cur, std::vector<std::vector<Part>>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  cur.push_back(kCircled);
  middles(m - 1, cur, out);
  cur.pop_back();
  for (int k = 1; k <= m; ++k) {
    cur.push_back(Part{k, false});
    middles(m - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CircledComposition> enumerate_circled(int n) {
  std::vector<CircledComposition> out;
  if (n < 2) return out;
  std::vector<std::vector<Part>> mids;
  std::vector<Part> cur;
  middles(n - 2, cur, mids);
  out.reserve(mids.size());
  for (auto& mid : mids) {
    mid.insert(mid.begin(), kCircled);
    mid.push_back(kCircled);
    out.emplace_back(std::move(mid));
  }
  return out;
}

BigInt count_dominators(int n, const CircledComposition& y) {
  if (n < 2 || n < y.total()) return 0;
  const auto& Y = y.parts();
  const int q = static_cast<int>(Y.size());
  if (q > 62) throw std::invalid_argument("count_dominators: pattern too long");
  std::vector<bool> tail_circled(q + 1, true);
  for (int j = q - 1; j >= 0; --j) tail_circled[j] = tail_circled[j + 1] && Y[j].circled;
  const int lead = y.leading_circled();
  int cap = q;
  for (const Part& p : Y) cap = std::max(cap, p.value);

  // Bit 0: nothing matched yet.  Bit j (1 <= j < q): the first j parts of
  // y are matched.  kAccept: y is dominated.
  using Mask = std::uint64_t;
  constexpr Mask kAccept = ~Mask{0};
  auto step = [&](Mask m, const Part& part) -> Mask {
    if (m == kAccept) return kAccept;
    Mask out = m;
    bool accept = false;
    auto reach = [&](int j) {
      if (j >= q) accept = true;
      else out |= Mask{1} << j;
    };
    if (m & 1) {
      if (part.circled) {
        reach(1);
      } else {
        if (tail_circled[0] && q <= part.value) accept = true;
        for (int v = 1; v <= std::min(part.value, lead); ++v) reach(v);
      }
    }
    for (int j = 1; j < q; ++j) {
      if (!(m >> j & 1)) continue;
      if (part.circled) {
        if (Y[j].circled) reach(j + 1);
      } else {
        if (!Y[j].circled && Y[j].value <= part.value) reach(j + 1);
        if (tail_circled[j] && q - j <= part.value) accept = true;
      }
    }
    return accept ? kAccept : out;
  };

  // dp[t]: (mask, last part circled) -> number of part sequences of total t
  // that start with a circled part.
  std::vector<std::map<std::pair<Mask, bool>, BigInt>> dp(n + 1);
  dp[1][{step(1, kCircled), true}] = 1;
  for (int t = 1; t < n; ++t) {
    for (const auto& [key, ways] : dp[t]) {
      const Mask m = key.first;
      dp[t + 1][{step(m, kCircled), true}] += ways;
      Mask capped = 0;
      for (int v = 1; t + v <= n; ++v) {
        if (v <= cap) capped = step(m, Part{v, false});
        dp[t + v][{capped, false}] += ways;
      }
    }
    dp[t].clear();
  }
  BigInt total = 0;
  for (const auto& [key, ways] : dp[n]) {
    if (key.first == kAccept && key.second) total += ways;
  }
  return total;
}

BigInt count_avoiders_1324(int n, const CircledComposition& y) {
  if (n < 1) return 0;
  if (n == 1) return 1;
  return fibonacci(2 * n - 4) - count_dominators(n, y);
}

namespace {

// Rebuilds (1)^r u_1 ... u_{K-1} (1)^m u_K (1)^s from its statistics.
CircledComposition assemble(int r, std::vector<int> uncircled, int interior, int s) {
  std::sort(uncircled.begin(), uncircled.end(), std::greater<>());
  if (r < s) std::swap(r, s);
  std::vector<Part> parts(static_cast<std::size_t>(r), kCircled);
  for (std::size_t i = 0; i + 1 < uncircled.size(); ++i) parts.push_back(Part{uncircled[i], false});
  parts.insert(parts.end(), static_cast<std::size_t>(interior), kCircled);
  parts.push_back(Part{uncircled.back(), false});
  parts.insert(parts.end(), static_cast<std::size_t>(s), kCircled);
  return CircledComposition(std::move(parts));
}

struct Stats {
  int r, s, interior;
  std::vector<int> uncircled;
};

Stats stats_of(const CircledComposition& x) {
  Stats st{x.leading_circled(), x.trailing_circled(), 0, {}};
  for (const Part& p : x.parts()) {
    if (!p.circled) st.uncircled.push_back(p.value);
  }
  st.interior = static_cast<int>(x.size()) - static_cast<int>(st.uncircled.size()) - st.r - st.s;
  return st;
}

}  // namespace

CircledComposition standard_form(const CircledComposition& x) {
  if (!x.has_uncircled()) return x;
  const Stats st = stats_of(x);
  return assemble(st.r, st.uncircled, st.interior, st.s);
}

CircledComposition wilf_normal_form(const CircledComposition& x) {
  CircledComposition cur = standard_form(x);
  while (cur.has_uncircled()) {
    Stats st = stats_of(cur);
    if (st.r == 2 || st.s == 2) {
      // (1)^2 c B  ~  (1) 1 c B, applied at whichever end has two.
      if (st.r == 2) st.r = 1;
      else st.s = 1;
      st.uncircled.push_back(1);
    } else if (st.uncircled.size() >= 2 &&
               std::find(st.uncircled.begin(), st.uncircled.end(), 2) != st.uncircled.end()) {
      // A 2 B  ~  A 1 (1) B once the 2 is moved ahead of another uncircled part.
      *std::find(st.uncircled.begin(), st.uncircled.end(), 2) = 1;
      st.interior += 1;
    } else {
      break;
    }
    cur = assemble(st.r, st.uncircled, st.interior, st.s);
  }
  return cur;
}

int reduced_shape(const CircledComposition& x) {
  if (!x.has_uncircled()) return 1;
  const Stats st = stats_of(x);
  if (st.r < st.s || st.r == 2 || st.s == 2) return 0;
  if (!std::is_sorted(st.uncircled.rbegin(), st.uncircled.rend())) return 0;
  const int k = static_cast<int>(st.uncircled.size());
  const bool has_two = std::find(st.uncircled.begin(), st.uncircled.end(), 2) != st.uncircled.end();
  if (x != assemble(st.r, st.uncircled, st.interior, st.s)) return 0;
  if (st.interior > 0) return has_two ? 0 : 2;
  return (k >= 2 && has_two) ? 0 : 3;
}

namespace {

// 1 - 2t + t^e
TruncatedSeries one_minus_2t_plus(std::size_t N, int e) {
  TruncatedSeries d = TruncatedSeries::polynomial(N, {1, -2});
  d += TruncatedSeries::monomial(N, 1, static_cast<std::size_t>(e));
  return d;
}

TruncatedSeries S(std::size_t N, int R) {
  if (R < 0) return TruncatedSeries::zero(N);
  const TruncatedSeries one_minus_t = TruncatedSeries::polynomial(N, {1, -1});
  TruncatedSeries sum = TruncatedSeries::constant(N, 1);
  for (int m = 1; m <= R; ++m) {
    TruncatedSeries term = TruncatedSeries::monomial(N, 1, static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) term = term * one_minus_t / one_minus_2t_plus(N, R - m + j + 1);
    sum += term;
  }
  return sum;
}

// Dominating material for the leading string of r circled parts.
TruncatedSeries F_lead(std::size_t N, int r) {
  const TruncatedSeries one = TruncatedSeries::constant(N, 1);
  const TruncatedSeries s1 = S(N, r - 1);
  const TruncatedSeries tail = TruncatedSeries::monomial(N, 1, static_cast<std::size_t>(r)) /
                               TruncatedSeries::polynomial(N, {1, -1});
  return (s1 - S(N, r - 2)).shifted(1) + (s1 - one) * tail;
}

// Dominating material for the trailing string of s circled parts.
TruncatedSeries F_trail(std::size_t N, int s) {
  const TruncatedSeries one_minus_t = TruncatedSeries::polynomial(N, {1, -1});
  TruncatedSeries f = TruncatedSeries::polynomial(N, {0, 1, -1}) / TruncatedSeries::polynomial(N, {1, -3, 1});
  for (int c = 1; c <= s - 1; ++c) {
    TruncatedSeries term = TruncatedSeries::monomial(N, 1, static_cast<std::size_t>(c));
    for (int j = 0; j <= c - 1; ++j) term = term * one_minus_t / one_minus_2t_plus(N, s - j);
    f -= term;
  }
  return f;
}

}  // namespace

TruncatedSeries gf_dominators(const CircledComposition& x, int order) {
  if (!x.has_uncircled()) {
    throw std::invalid_argument("gf_dominators: needs an uncircled part; use count_dominators instead");
  }
  const std::size_t N = static_cast<std::size_t>(order);
  const int r = x.leading_circled();
  const int s = x.trailing_circled();
  TruncatedSeries f = F_lead(N, r) * F_trail(N, s);
  const TruncatedSeries circled_factor =
      TruncatedSeries::polynomial(N, {0, 1, -1}) / TruncatedSeries::polynomial(N, {1, -2});
  const auto& parts = x.parts();
  for (std::size_t i = static_cast<std::size_t>(r); i + static_cast<std::size_t>(s) < parts.size(); ++i) {
    if (parts[i].circled) {
      f *= circled_factor;
    } else {
      const std::size_t k = static_cast<std::size_t>(parts[i].value);
      TruncatedSeries den = TruncatedSeries::polynomial(N, {1, -3, 1});
      den += TruncatedSeries::monomial(N, 1, k);
      f *= TruncatedSeries::monomial(N, 1, k) / den;
    }
  }
  return f;
}

BigInt count_by_uncircled(int n, int i) {
  if (n < 2 || i < 0) return 0;
  return binomial(n + i - 2, 2 * i);
}

BigInt closed_delta_1324(int n, int k) {
  if (n == 1) return 1;
  if (n < 2 || k < 1) throw std::invalid_argument("closed_delta_1324: need n >= 2 and k >= 1");
  BigInt r = 0;
  for (int i = 0; i <= k - 1; ++i) r += binomial(n - 2 + i, 2 * i);
  return r;
}

BigInt recur_1k1(int n, int k) {
  if (k < 1) throw std::invalid_argument("recur_1k1: k >= 1");
  if (n < 1) return 0;
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
  a[1] = 1;
  for (int m = 2; m <= n; ++m) {
    if (m <= k) {
      a[m] = fibonacci(2 * m - 4);
      continue;
    }
    a[m] = a[m - 1];
    for (int i = 1; i <= k - 1; ++i) a[m] += a[m - i];
  }
  return a[n];
}

BigInt size5_counts_1324(int n, const std::string& which) {
  if (n < 1) return 0;
  if (which == "15432") {
    if (n < 4) return closed_delta_1324(n, 3);
    return 1 + binomial(n - 1, 2) + binomial(n, 4);
  }
  if (which == "15234") {
    if (n <= 2) return 1;
    BigInt a = 1, b = 2;  // a(2), a(3)
    for (int m = 4; m <= n; ++m) {
      BigInt c = 2 * b + a;
      a = std::move(b);
      b = std::move(c);
    }
    return b;
  }
  if (which == "12345") {
    if (n < 4) return n == 1 ? BigInt(1) : fibonacci(2 * n - 4);
    BigInt r = fibonacci(n + 1) - 4;
    for (int i = 0; i <= n - 4; ++i) r += (n - 3 - i) * fibonacci(i);
    return r;
  }
  if (which == "12345:recurrence") {
    if (n < 4) return n == 1 ? BigInt(1) : fibonacci(2 * n - 4);
    BigInt a = 5, b = 12;  // a(4), a(5)
    if (n == 4) return a;
    for (int m = 6; m <= n; ++m) {
      BigInt c = b + a + (m + 1);
      a = std::move(b);
      b = std::move(c);
    }
    return b;
  }
  if (which == "12354") {
    BigInt a = 1;  // a(1) = a(2) = 1
    for (int m = 3; m <= n; ++m) a += fibonacci(m + 1) - (m + 1);
    return a;
  }
  if (which == "12354:closed") {
    if (n == 1) return 1;
    return fibonacci(n + 3) - 1 - binomial(n + 2, 2);
  }
  if (which == "13542") return pow2(n - 1) - (n - 1);
  throw std::invalid_argument("size5_counts_1324: unknown selector '" + which + "'");
}

std::vector<BigInt> descent_poly_1324(int n) {
  if (n < 1) throw std::invalid_argument("descent_poly_1324: n >= 1");
  if (n == 1) return {1};
  std::vector<BigInt> c(n, 0);
  for (int i = 1; i <= n - 1; ++i) c[i] = binomial(n + i - 3, n - i - 1);
  return c;
}

}  // namespace circperm::c1324
