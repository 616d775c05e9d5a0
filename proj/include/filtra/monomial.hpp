#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace filtra {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector. Unused slots stay zero, so arity lives in the ring.
class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() { exps_.fill(0); }
  /// Throws ExponentOverflow for too many variables or too-large exponents.
  static Monomial from_exponents(const std::vector<long long>& exps);
  static Monomial variable(std::size_t i, long long power = 1);

  Exp operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const;

  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial pow(unsigned k) const;

  std::vector<long long> exponents(std::size_t nvars) const;
  std::size_t hash() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  std::array<Exp, kMaxVars> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  /// The first k variables are strictly heavier than the rest.
  static MonomialOrder elimination(std::size_t k) { return MonomialOrder(Kind::Elimination, k); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  std::string to_string() const;

  std::strong_ordering compare(const Monomial& u, const Monomial& v, std::size_t nvars) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace filtra
