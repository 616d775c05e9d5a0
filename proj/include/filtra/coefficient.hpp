#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace filtra {

/// Either the rationals or a prime field F_p with p < 2^63.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws ConfigError unless p is a prime below 2^63.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

class Coefficient {
 public:
  struct Mod {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const Mod&) const = default;
  };

  Coefficient() : value_(Mod{0, 0}) {}  // placeholder; real values come from a Field
  static Coefficient zero(const Field& f) { return from_int(f, 0); }
  static Coefficient one(const Field& f) { return from_int(f, 1); }
  static Coefficient from_int(const Field& f, long long n);
  static Coefficient from_mpz(const Field& f, const mpz_class& n);
  /// n/d in the field; d must be nonzero (and invertible mod p).
  static Coefficient from_ratio(const Field& f, const mpz_class& n, const mpz_class& d);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient inverse() const;
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  bool operator==(const Coefficient& o) const;
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  /// True when the printed form starts with '-'.
  bool is_negative_repr() const;
  /// Integer a/b for Q (a/b form when b != 1); symmetric residue for F_p.
  std::string to_string() const;
  /// Stable hash input.
  std::string key() const;

  const std::variant<Mod, mpq_class>& raw() const { return value_; }

 private:
  explicit Coefficient(Mod m) : value_(m) {}
  explicit Coefficient(mpq_class q) : value_(std::move(q)) {}
  std::variant<Mod, mpq_class> value_;
};

}  // namespace filtra
