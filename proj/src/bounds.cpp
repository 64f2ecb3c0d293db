#include "fewlen/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <gmpxx.h>

namespace fewlen {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;

BoundValue make_value(std::string name, double log_value, bool up_to_constant = false,
                      std::string note = {}) {
  BoundValue v;
  v.name = std::move(name);
  v.log_value = log_value;
  v.value = log_value > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(log_value);
  v.up_to_constant = up_to_constant;
  v.note = std::move(note);
  return v;
}

BoundValue make_direct(std::string name, double value, bool up_to_constant = false,
                       std::string note = {}) {
  BoundValue v;
  v.name = std::move(name);
  v.value = value;
  v.log_value = value > 0 ? std::log(value) : -std::numeric_limits<double>::infinity();
  v.up_to_constant = up_to_constant;
  v.note = std::move(note);
  return v;
}

}  // namespace

const BoundValue* BoundsReport::find(const std::string& name) const {
  for (const auto& v : values)
    if (v.name == name) return &v;
  return nullptr;
}

const BoundValue& BoundsReport::at(const std::string& name) const {
  const BoundValue* v = find(name);
  if (!v) throw std::out_of_range("no bound value named " + name);
  return *v;
}

BoundsReport eval_lower_bounds(long long n, long long m, double c) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("m out of range");
  BoundsReport report;
  report.params = {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}, {"c", c}};
  double nn = static_cast<double>(n), mm = static_cast<double>(m);
  report.values.push_back(make_direct("density", c * mm * std::pow(nn, -4.0 / 3.0), true,
                                      "c*m*n^(-4/3), up to unspecified constant"));
  report.values.push_back(make_direct("density-strong",
                                      c * std::pow(mm, 1.592412) * std::pow(nn, -2.320687), true,
                                      "c*m^1.592412*n^(-2.320687), up to unspecified constant"));
  report.values.push_back(
      make_direct("complete-kn", std::ceil((nn - 1.0) / 3.0), false, "applies to K_n"));
  report.values.push_back(
      make_direct("k2n", std::ceil(std::sqrt(nn / 2.0)), false, "applies to K_{2,n}"));
  return report;
}

unsigned long long enumerate_perfect_matchings(int n) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("n must be even and non-negative");
  if (n > 16) throw std::invalid_argument("enumeration supported for n <= 16");
  if (n == 0) return 1;
  std::vector<char> used(static_cast<size_t>(n), 0);
  unsigned long long count = 0;
  // match the lowest unused point with every possible partner
  auto rec = [&](auto&& self) -> void {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[static_cast<size_t>(i)]) {
        first = i;
        break;
      }
    if (first < 0) {
      ++count;
      return;
    }
    used[static_cast<size_t>(first)] = 1;
    for (int j = first + 1; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = 1;
      self(self);
      used[static_cast<size_t>(j)] = 0;
    }
    used[static_cast<size_t>(first)] = 0;
  };
  rec(rec);
  return count;
}

std::string count_perfect_matchings(long long n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and at least 2");
  mpz_class f = 1;
  for (long long i = n; i >= 2; i -= 2) f *= static_cast<long>(i - 1);
  return f.get_str();
}

long long count_labelled_regular_graphs(int n, int delta) {
  if (n < 1 || delta < 0 || delta >= n) throw std::invalid_argument("need 0 <= delta < n");
  if ((static_cast<long long>(n) * delta) % 2 != 0)
    throw std::invalid_argument("delta * n must be even");
  if (n > 8) throw std::invalid_argument("exhaustive count supported for n <= 8");

  std::vector<int> residual(static_cast<size_t>(n), delta);
  long long count = 0;
  // connect vertex v's remaining stubs to higher-indexed vertices
  auto rec = [&](auto&& self, int v) -> void {
    while (v < n && residual[static_cast<size_t>(v)] == 0) ++v;
    if (v >= n) {
      ++count;
      return;
    }
    // choose residual[v] partners among v+1..n-1 with spare degree
    std::vector<int> partners;
    for (int u = v + 1; u < n; ++u)
      if (residual[static_cast<size_t>(u)] > 0) partners.push_back(u);
    int need = residual[static_cast<size_t>(v)];
    if (static_cast<int>(partners.size()) < need) return;
    std::vector<int> pick(static_cast<size_t>(need));
    auto choose = [&](auto&& chooser, int start, int depth) -> void {
      if (depth == need) {
        for (int i = 0; i < need; ++i) --residual[static_cast<size_t>(pick[static_cast<size_t>(i)])];
        residual[static_cast<size_t>(v)] = 0;
        self(self, v + 1);
        residual[static_cast<size_t>(v)] = need;
        for (int i = 0; i < need; ++i) ++residual[static_cast<size_t>(pick[static_cast<size_t>(i)])];
        return;
      }
      for (int i = start; i < static_cast<int>(partners.size()); ++i) {
        pick[static_cast<size_t>(depth)] = partners[static_cast<size_t>(i)];
        chooser(chooser, i + 1, depth + 1);
      }
    };
    choose(choose, 0, 0);
  };
  rec(rec, 0);
  return count;
}

BoundsReport eval_regular_count_bound(int n, int delta) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  if (n <= delta) throw std::invalid_argument("need n > delta");
  if ((static_cast<long long>(n) * delta) % 2 != 0)
    throw std::invalid_argument("delta * n must be even; no delta-regular graph exists");
  BoundsReport report;
  report.params = {{"n", static_cast<double>(n)}, {"delta", static_cast<double>(delta)}};
  double log_bound = (static_cast<double>(delta) * n / 2.0) * std::log(n / (3.0 * delta));
  report.values.push_back(make_value("regular-count-bound", log_bound, false,
                                     "(n/(3*delta))^(delta*n/2)"));
  if (n <= 8) {
    long long exact = count_labelled_regular_graphs(n, delta);
    BoundValue v = make_direct("regular-count-exact", static_cast<double>(exact));
    v.exact = std::to_string(exact);
    v.note = "exhaustive enumeration";
    report.values.push_back(std::move(v));
  }
  return report;
}

double log_binomial(double a, double b) {
  if (b < 0) return -std::numeric_limits<double>::infinity();
  long long k = static_cast<long long>(std::llround(b));
  if (k == 0) return 0.0;
  if (a < b) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (long long i = 0; i < k; ++i) s += std::log(a - static_cast<double>(i));
  s -= std::lgamma(static_cast<double>(k) + 1.0);
  return s;
}

std::string exact_binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out.get_str();
}

BoundsReport eval_zero_pattern_bound(long long delta, long long t, long long p) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  if (p < 0 || p > t) throw std::invalid_argument("need 0 <= p <= t");
  BoundsReport report;
  report.params = {{"delta", static_cast<double>(delta)},
                   {"t", static_cast<double>(t)},
                   {"p", static_cast<double>(p)}};
  double lv = log_binomial(static_cast<double>(delta) * t, static_cast<double>(p));
  BoundValue v = make_value("zero-pattern-bound", lv, false, "C(delta*t, p)");
  if (delta * t <= 100000)
    v.exact = exact_binomial(static_cast<unsigned long>(delta * t), static_cast<unsigned long>(p));
  report.values.push_back(std::move(v));
  return report;
}

BoundsReport eval_ex_bound(double n, double d, double c) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  BoundsReport report;
  report.params = {{"n", n}, {"d", d}, {"c", c}};
  double sst = c * d * std::pow(n, 4.0 / 3.0);
  double kt = c * std::pow(n, 1.457341) * std::pow(d, 0.627977);
  report.values.push_back(make_direct("ex-dense", sst, true, "c*d*n^(4/3)"));
  report.values.push_back(make_direct("ex-incidence", kt, true, "c*n^1.457341*d^0.627977"));
  report.values.push_back(make_direct("ex-best", std::min(sst, kt), true,
                                      sst <= kt ? "ex-dense is smaller" : "ex-incidence is smaller"));
  report.values.push_back(make_direct("crossover-d", std::pow(n, 1.0 / 3.0), false,
                                      "bounds cross near d = n^(1/3) at equal constants"));
  return report;
}

BoundsReport eval_graph_count_bound(double n, double m, double d, double c) {
  if (n < 1 || d < 1 || m < 0) throw std::invalid_argument("need n >= 1, d >= 1, m >= 0");
  BoundsReport report;
  report.params = {{"n", n}, {"m", m}, {"d", d}, {"c", c}};
  double ex = eval_ex_bound(n, d, c).at("ex-best").value;
  double log_prefix = (2.0 * n + d) * std::log(kE * n * d / 2.0);
  double log_choose = log_binomial(ex, m);
  report.values.push_back(make_direct("ex-used", ex, true));
  report.values.push_back(make_value("zero-pattern-term", log_prefix, false, "(e*n*d/2)^(2n+d)"));
  report.values.push_back(make_value("subgraph-term", log_choose, true, "C(ex(n,d), m)"));
  report.values.push_back(make_value("graph-count-bound", log_prefix + log_choose, true,
                                     "(e*n*d/2)^(2n+d) * C(ex(n,d), m)"));
  return report;
}

double polybound_exponent(double alpha, double beta, double delta, double eps) {
  if (!(beta > 0) || !(alpha > 1) || !(alpha < 2) || !(alpha + beta > 2))
    throw std::invalid_argument("need beta > 0 and 1 < alpha < 2 < alpha + beta");
  return (2.0 - alpha) / beta -
         (2.0 - alpha + beta) * (4.0 + 2.0 * eps) / (beta * beta * delta + 4.0 * beta);
}

BoundsReport eval_degree_lower_exponents(double delta, double eps) {
  if (delta < 5) throw std::invalid_argument("delta must be at least 5");
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  BoundsReport report;
  report.params = {{"delta", delta}, {"eps", eps}};

  double e7 = 2.0 / 3.0 - (20.0 + 10.0 * eps) / (3.0 * delta + 12.0);
  BoundValue v7 = make_direct("degree7-exponent", e7);
  v7.note = delta >= 7 ? "valid for delta >= 7" : "not-applicable: requires delta >= 7";
  report.values.push_back(std::move(v7));

  double e8 =
      0.864138 - (4.682544 + 2.341272 * eps) / (0.394355 * delta + 2.511908);
  BoundValue v8 = make_direct("degree8-exponent", e8);
  v8.note = delta >= 8 ? "valid for delta >= 8" : "not-applicable: requires delta >= 8";
  report.values.push_back(std::move(v8));

  BoundValue dom = make_direct("dominant", delta >= 17 ? 8 : 7);
  dom.note = delta >= 17 ? "degree-8 exponent dominates for delta >= 17"
                         : "degree-7 exponent dominates below delta = 17";
  report.values.push_back(std::move(dom));
  return report;
}

}  // namespace fewlen
