#include "filtra/coefficient.hpp"

#include "filtra/error.hpp"

namespace filtra {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 reduce_mpz(const mpz_class& n, u64 p) {
  mpz_class r;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), pm.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

void same_mode(const Coefficient& a, const Coefficient& b) {
  if (a.raw().index() != b.raw().index())
    raise(ErrorKind::ContextMismatch, "coefficients from different fields");
  if (a.raw().index() == 0 &&
      std::get<0>(a.raw()).p != std::get<0>(b.raw()).p)
    raise(ErrorKind::ContextMismatch, "coefficients from different prime fields");
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p >= (u64{1} << 63) || !is_prime_u64(p))
    raise(ErrorKind::ConfigError, "field characteristic " + std::to_string(p) + " is not a prime below 2^63");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("QQ") : "F_" + std::to_string(p_);
}

Coefficient Coefficient::from_int(const Field& f, long long n) {
  return from_mpz(f, mpz_class(static_cast<long>(n)));
}

Coefficient Coefficient::from_mpz(const Field& f, const mpz_class& n) {
  if (f.is_rational()) return Coefficient(mpq_class(n));
  return Coefficient(Mod{reduce_mpz(n, f.characteristic()), f.characteristic()});
}

Coefficient Coefficient::from_ratio(const Field& f, const mpz_class& n, const mpz_class& d) {
  if (d == 0) raise(ErrorKind::SyntaxError, "division by zero");
  if (f.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Coefficient(std::move(q));
  }
  Coefficient den = from_mpz(f, d);
  if (den.is_zero()) raise(ErrorKind::SyntaxError, "denominator vanishes in " + f.to_string());
  return from_mpz(f, n) / den;
}

Field Coefficient::field() const {
  if (value_.index() == 1) return Field::rationals();
  return Field::prime(std::get<0>(value_).p);
}

bool Coefficient::is_zero() const {
  if (value_.index() == 0) return std::get<0>(value_).v == 0;
  return sgn(std::get<1>(value_)) == 0;
}

bool Coefficient::is_one() const {
  if (value_.index() == 0) return std::get<0>(value_).v == 1;
  return std::get<1>(value_) == 1;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  same_mode(*this, o);
  if (value_.index() == 0) {
    const Mod& a = std::get<0>(value_);
    u64 s = a.v + std::get<0>(o.value_).v;
    if (s >= a.p) s -= a.p;
    return Coefficient(Mod{s, a.p});
  }
  return Coefficient(mpq_class(std::get<1>(value_) + std::get<1>(o.value_)));
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  same_mode(*this, o);
  if (value_.index() == 0) {
    const Mod& a = std::get<0>(value_);
    u64 b = std::get<0>(o.value_).v;
    return Coefficient(Mod{a.v >= b ? a.v - b : a.v + (a.p - b), a.p});
  }
  return Coefficient(mpq_class(std::get<1>(value_) - std::get<1>(o.value_)));
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  same_mode(*this, o);
  if (value_.index() == 0) {
    const Mod& a = std::get<0>(value_);
    return Coefficient(Mod{mulmod(a.v, std::get<0>(o.value_).v, a.p), a.p});
  }
  return Coefficient(mpq_class(std::get<1>(value_) * std::get<1>(o.value_)));
}

Coefficient Coefficient::operator/(const Coefficient& o) const { return *this * o.inverse(); }

Coefficient Coefficient::operator-() const {
  if (value_.index() == 0) {
    const Mod& a = std::get<0>(value_);
    return Coefficient(Mod{a.v == 0 ? 0 : a.p - a.v, a.p});
  }
  return Coefficient(mpq_class(-std::get<1>(value_)));
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  if (value_.index() == 0) {
    const Mod& a = std::get<0>(value_);
    return Coefficient(Mod{powmod(a.v, a.p - 2, a.p), a.p});
  }
  return Coefficient(mpq_class(1 / std::get<1>(value_)));
}

bool Coefficient::operator==(const Coefficient& o) const { return value_ == o.value_; }

bool Coefficient::is_negative_repr() const {
  if (value_.index() == 0) {
    const Mod& a = std::get<0>(value_);
    return a.v > a.p / 2;
  }
  return sgn(std::get<1>(value_)) < 0;
}

std::string Coefficient::to_string() const {
  if (value_.index() == 0) {
    const Mod& a = std::get<0>(value_);
    if (a.v > a.p / 2) return "-" + std::to_string(a.p - a.v);
    return std::to_string(a.v);
  }
  return std::get<1>(value_).get_str();
}

std::string Coefficient::key() const {
  if (value_.index() == 0) return std::to_string(std::get<0>(value_).v);
  return std::get<1>(value_).get_str();
}

}  // namespace filtra
