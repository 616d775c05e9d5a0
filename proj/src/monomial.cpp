#include "filtra/monomial.hpp"

#include <limits>

#include "filtra/error.hpp"

namespace filtra {

namespace {

constexpr long long kExpMax = std::numeric_limits<Monomial::Exp>::max();

void check_exp(long long e) {
  if (e < 0 || e > kExpMax)
    raise(ErrorKind::ExponentOverflow, "exponent " + std::to_string(e) + " out of range");
}

// grevlex restricted to variables [lo, hi)
std::strong_ordering grevlex_range(const Monomial& u, const Monomial& v, std::size_t lo,
                                   std::size_t hi) {
  long du = 0, dv = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    du += u[i];
    dv += v[i];
  }
  if (du != dv) return du <=> dv;
  for (std::size_t i = hi; i-- > lo;) {
    if (u[i] != v[i]) return v[i] <=> u[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial Monomial::from_exponents(const std::vector<long long>& exps) {
  if (exps.size() > kMaxVars)
    raise(ErrorKind::ExponentOverflow, "at most " + std::to_string(kMaxVars) + " variables supported");
  Monomial m;
  long long deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    check_exp(exps[i]);
    m.exps_[i] = static_cast<Exp>(exps[i]);
    deg += exps[i];
  }
  m.degree_ = static_cast<std::uint32_t>(deg);
  return m;
}

Monomial Monomial::variable(std::size_t i, long long power) {
  if (i >= kMaxVars) raise(ErrorKind::ExponentOverflow, "variable index out of range");
  check_exp(power);
  Monomial m;
  m.exps_[i] = static_cast<Exp>(power);
  m.degree_ = static_cast<std::uint32_t>(power);
  return m;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i]) mask |= 1u << i;
  return mask;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(exps_[i]) + o.exps_[i];
    if (s > kExpMax) raise(ErrorKind::ExponentOverflow, "exponent overflow in product");
    m.exps_[i] = static_cast<Exp>(s);
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = static_cast<Exp>(exps_[i] - o.exps_[i]);
  m.degree_ = degree_ - o.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m;
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exps_[i] = std::max(exps_[i], o.exps_[i]);
    deg += m.exps_[i];
  }
  m.degree_ = deg;
  return m;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] && o.exps_[i]) return false;
  return true;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned long long e = static_cast<unsigned long long>(exps_[i]) * k;
    if (e > static_cast<unsigned long long>(kExpMax))
      raise(ErrorKind::ExponentOverflow, "exponent overflow in power");
    m.exps_[i] = static_cast<Exp>(e);
  }
  m.degree_ = degree_ * k;
  return m;
}

std::vector<long long> Monomial::exponents(std::size_t nvars) const {
  return std::vector<long long>(exps_.begin(), exps_.begin() + static_cast<long>(nvars));
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exp e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Elimination: return "elim" + std::to_string(block_);
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v,
                                            std::size_t nvars) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (u[i] != v[i]) return u[i] <=> v[i];
      return std::strong_ordering::equal;
    case Kind::Grevlex:
      if (u.degree() != v.degree()) return u.degree() <=> v.degree();
      for (std::size_t i = nvars; i-- > 0;)
        if (u[i] != v[i]) return v[i] <=> u[i];
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      auto c = grevlex_range(u, v, 0, block_);
      if (c != 0) return c;
      return grevlex_range(u, v, block_, nvars);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace filtra
