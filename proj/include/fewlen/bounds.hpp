#pragma once

#include <map>
#include <string>
#include <vector>

namespace fewlen {

struct BoundValue {
  std::string name;
  double value = 0.0;      // direct evaluation; may be inf when it overflows
  double log_value = 0.0;  // natural log, finite whenever the value is positive
  bool up_to_constant = false;
  std::string exact;  // decimal string when the quantity is an exact integer
  std::string note;
};

struct BoundsReport {
  std::map<std::string, double> params;
  std::vector<BoundValue> values;

  const BoundValue* find(const std::string& name) const;
  const BoundValue& at(const std::string& name) const;
};

/// Density lower bounds on the distance numbers of an n-vertex m-edge graph
/// (exposed constant c, default 1) plus the constant-free complete-graph and
/// two-centre bounds ceil((n-1)/3) and ceil(sqrt(n/2)).
BoundsReport eval_lower_bounds(long long n, long long m, double c = 1.0);

/// (n/(3*delta))^(delta*n/2) in log space; exact labelled-regular count by
/// enumeration for n <= 8.
BoundsReport eval_regular_count_bound(int n, int delta);

/// (n-1)!! by the double-factorial recurrence, exact.
std::string count_perfect_matchings(long long n);

/// Explicit enumeration of the perfect matchings of n labelled points.
unsigned long long enumerate_perfect_matchings(int n);

/// Exhaustive count of labelled delta-regular graphs on n vertices (n <= 8).
long long count_labelled_regular_graphs(int n, int delta);

/// Zero-pattern bound C(delta*t, p); exact and in log space.
BoundsReport eval_zero_pattern_bound(long long delta, long long t, long long p);

/// (e*n*d/2)^(2n+d) * C(ex(n,d), m) in log space, with ex(n,d) taken as the
/// smaller of the two extremal-function bounds.
BoundsReport eval_graph_count_bound(double n, double m, double d, double c = 1.0);

/// Both extremal-function bounds c*d*n^(4/3) and c*n^1.457341*d^0.627977,
/// flagging which is smaller; they cross near d = n^(1/3).
BoundsReport eval_ex_bound(double n, double d, double c = 1.0);

/// Exponents of the regular-graph distance-number lower bounds for maximum
/// degree delta and slack eps, plus which of the two dominates.
BoundsReport eval_degree_lower_exponents(double delta, double eps);

/// General counting-argument exponent
/// (2-a)/b - (2-a+b)(4+2e)/(b^2*delta + 4b).
double polybound_exponent(double alpha, double beta, double delta, double eps);

/// log C(a, b) for real a >= 0 and integer b >= 0 (generalized; 0 for b == 0,
/// -inf when b > a for integral a-like arguments).
double log_binomial(double a, double b);

/// Exact C(n, k) as a decimal string (arbitrary precision).
std::string exact_binomial(unsigned long n, unsigned long k);

}  // namespace fewlen
