#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "filtra/polynomial.hpp"

namespace filtra {

/// Reduced, monic Groebner basis, sorted by ascending lead monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, std::uint64_t fingerprint);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& generators() const { return basis_; }
  std::uint64_t fingerprint() const { return fingerprint_; }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool all_monomial() const;
  std::vector<Monomial> lead_monomials() const;

  bool operator==(const GroebnerBasis& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::uint64_t fingerprint_;
};

struct BuchbergerOptions {
  bool use_criteria = true;       // product and chain criteria
  bool monomial_shortcut = true;  // all-monomial input: minimal generators directly
};

/// Fingerprint of an unordered generator list together with ring and order.
std::uint64_t generator_fingerprint(const RingPtr& ring, std::span<const Polynomial> gens);

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         BuchbergerOptions opts = {});

/// Memoized buchberger. Persists to $FILTRA_CACHE_DIR when set.
GroebnerBasis groebner_cached(const RingPtr& ring, std::span<const Polynomial> gens);
void clear_groebner_cache();
std::size_t groebner_cache_size();

/// Fully reduced remainder of f.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Exact quotient f/g; throws PreconditionFailed when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Minimal generators of a monomial ideal, ascending.
std::vector<Monomial> minimalize(const RingPtr& ring, std::vector<Monomial> gens);

/// Monomials outside a monomial ideal.
class StandardMonomialSet {
 public:
  StandardMonomialSet(RingPtr ring, std::vector<Monomial> lead_generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& lead_generators() const { return gens_; }
  bool is_standard(const Monomial& m) const;
  bool zero_dimensional() const;
  /// Degree ascending, then lex descending. Throws InfiniteSetEnumerationRequested.
  std::vector<Monomial> enumerate() const;
  std::uint64_t count() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

StandardMonomialSet standard_monomials(const GroebnerBasis& gb);

/// gens live in a ring whose first k variables are eliminated. Returns
/// generators of the elimination ideal, expressed in the input ring.
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::size_t k);

/// Krull dimension of ambient/(lead ideal); -1 for the unit ideal.
int lead_ideal_dimension(const GroebnerBasis& gb);

}  // namespace filtra
