#include "filtra/hilbert.hpp"

#include "filtra/error.hpp"

namespace filtra {

long long binomial(long long a, long long b) {
  if (b == 0) return 1;
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  __int128 r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return static_cast<long long>(r);
}

long long HilbertCoefficients::eval(long long n) const {
  long long v = 0;
  for (int i = 0; i <= degree && i < static_cast<int>(e.size()); ++i) {
    long long b = binomial(n + shift + degree - i - 1, degree - i);
    v += (i % 2 ? -1 : 1) * e[i] * b;
  }
  return v;
}

HilbertCoefficients fit_binomial(const NumericalFunction& h, int degree, int shift) {
  if (degree < 0) raise(ErrorKind::PreconditionFailed, "negative fit degree");
  const std::size_t need = static_cast<std::size_t>(degree) + 2;
  if (h.values.size() < need)
    raise(ErrorKind::HorizonTooSmall, "need at least " + std::to_string(need) + " values of " + h.kind +
                                          ", have " + std::to_string(h.values.size()));
  const long long N = static_cast<long long>(h.values.size()) - 1;
  const long long lo = N - degree;  // window [lo, N]
  std::vector<long long> r(h.values.begin() + lo, h.values.end());

  HilbertCoefficients out;
  out.degree = degree;
  out.shift = shift;
  out.window = static_cast<std::size_t>(degree) + 1;
  out.e.assign(degree + 1, 0);
  for (int i = 0; i <= degree; ++i) {
    int k = degree - i;
    // k-th forward difference at the window start
    std::vector<long long> diff(r.begin(), r.begin() + k + 1);
    for (int step = 0; step < k; ++step)
      for (int j = 0; j + step + 1 <= k; ++j) diff[j] = diff[j + 1] - diff[j];
    long long c = diff[0];
    out.e[i] = (i % 2 ? -c : c);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * binomial(lo + static_cast<long long>(j) + shift + k - 1, k);
  }
  long long n0 = N;
  while (n0 > 0 && out.eval(n0 - 1) == h.values[n0 - 1]) --n0;
  for (long long n = n0; n <= N; ++n)
    if (out.eval(n) != h.values[n])
      raise(ErrorKind::NoPolynomialTail, "trailing window of " + h.kind + " is not polynomial");
  if (N - n0 + 1 < static_cast<long long>(need))
    raise(ErrorKind::NoPolynomialTail, h.kind + " agrees with its fit on only " + std::to_string(N - n0 + 1) +
                                           " values; extend the horizon");
  out.postulation = static_cast<std::size_t>(n0);
  return out;
}

HilbertCoefficients fit_hilbert(const NumericalFunction& h, int d) { return fit_binomial(h, d, 0); }

SallyFit fit_sally(const NumericalFunction& g, int d) {
  SallyFit out;
  out.vanishes = true;
  for (long long v : g.values) out.vanishes = out.vanishes && v == 0;
  for (int s = d; s >= 1; --s) {
    HilbertCoefficients c = fit_binomial(g, s - 1, 1);
    if (c.e[0] != 0) {
      out.dim = s;
      out.coeffs = c;
      return out;
    }
  }
  out.dim = 0;
  out.coeffs.degree = -1;
  out.coeffs.shift = 1;
  // postulation of the zero polynomial
  std::size_t n0 = g.values.size();
  while (n0 > 0 && g.values[n0 - 1] == 0) --n0;
  out.coeffs.postulation = n0;
  if (g.values.size() - n0 < 2)
    raise(ErrorKind::NoPolynomialTail, "Sally function has not stabilized within the horizon");
  return out;
}

}  // namespace filtra
