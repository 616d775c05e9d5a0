#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace filtra {

/// C(a,b) with C(a,0)=1 and C(a,b)=0 whenever a<b.
long long binomial(long long a, long long b);

/// n -> value, for n = 0..values.size()-1.
struct NumericalFunction {
  std::vector<long long> values;
  std::string kind;  // e.g. "A/I_n", "A/Q^n", "S_n"

  std::size_t horizon() const { return values.empty() ? 0 : values.size() - 1; }
};

/// P(n) = sum_i (-1)^i e_i C(n + shift + degree - i - 1, degree - i).
/// shift 0 is the Hilbert-Samuel form; shift 1 is the Sally-module form.
struct HilbertCoefficients {
  int degree = 0;
  int shift = 0;
  std::vector<long long> e;
  std::size_t postulation = 0;  // least n0 with P(n) = h(n) for n0 <= n <= horizon
  std::size_t window = 0;       // number of trailing values used for the fit

  long long eval(long long n) const;
  bool operator==(const HilbertCoefficients& o) const {
    return degree == o.degree && shift == o.shift && e == o.e && postulation == o.postulation;
  }
};

/// Exact fit by finite differences on the trailing degree+1 values, then
/// extends the match backward. Requires degree+2 agreeing values.
/// Throws HorizonTooSmall or NoPolynomialTail.
HilbertCoefficients fit_binomial(const NumericalFunction& h, int degree, int shift);

/// Hilbert-Samuel fit of n -> l(A/I_n) in dimension d.
HilbertCoefficients fit_hilbert(const NumericalFunction& h, int d);

struct SallyFit {
  bool vanishes = false;   // g(n) = 0 for every computed n
  int dim = 0;             // degree + 1 of the Sally polynomial; 0 when it is zero
  HilbertCoefficients coeffs;  // e_0(S)..e_{dim-1}(S), shift 1
};

/// Fits n -> l(S_n) with dim S <= d.
SallyFit fit_sally(const NumericalFunction& g, int d);

}  // namespace filtra
