#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filtra/coefficient.hpp"
#include "filtra/monomial.hpp"

namespace filtra {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Variable names, coefficient field and active monomial order.
class PolyRing {
 public:
  static RingPtr create(std::vector<std::string> vars, Field field,
                        MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const {
    return order_.compare(u, v, vars_.size());
  }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  /// Same variables, field and order.
  bool same_context(const PolyRing& o) const;
  RingPtr with_order(MonomialOrder order) const;
  std::string monomial_to_string(const Monomial& m) const;

 private:
  PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order)
      : vars_(std::move(vars)), field_(field), order_(order) {}
  std::vector<std::string> vars_;
  Field field_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Coefficient coeff;
};

/// Terms are kept strictly descending in the ring's order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusted: terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial from_int(RingPtr ring, long long n);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Coefficient& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Coefficient& lead_coeff() const { return terms_.front().coeff; }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant coefficient, zero when absent.
  Coefficient constant_term() const;
  std::uint32_t total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Coefficient& c) const;
  Polynomial mul_term(const Monomial& m, const Coefficient& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial monic() const;
  /// this - c*m*g, the workhorse of reduction.
  Polynomial sub_mul_term(const Coefficient& c, const Monomial& m, const Polynomial& g) const;

  /// Re-express in another ring; variables matched by name.
  Polynomial map_to(const RingPtr& target) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Coefficient& c);

/// Throws ContextMismatch unless both rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace filtra
