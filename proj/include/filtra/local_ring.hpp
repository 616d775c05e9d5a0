#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "filtra/groebner.hpp"
#include "filtra/polynomial.hpp"

namespace filtra {

class LocalRing;
using LocalRingPtr = std::shared_ptr<const LocalRing>;

/// An ideal of A = (k[x]/J) localized at the origin, stored by lifted
/// generators in the ambient ring. Cheap to copy; caches are shared.
class IdealHandle {
 public:
  const LocalRingPtr& ring() const { return s_->ring; }
  /// Lifted generators reduced modulo J; the unit sentinel holds {1}.
  const std::vector<Polynomial>& generators() const { return s_->gens; }
  bool is_unit() const { return s_->unit; }

  /// Reduced GB of J + generators in the ambient ring (global).
  const GroebnerBasis& gb() const;
  /// Origin is an isolated point of V(J + generators).
  bool is_m_primary() const;
  /// For m-primary ideals: GB of an ideal supported only at the origin whose
  /// localization agrees with this one. Throws NotMPrimary otherwise.
  const GroebnerBasis& local_model() const;

  std::string to_string() const;

 private:
  friend class LocalRing;
  struct State {
    LocalRingPtr ring;
    std::vector<Polynomial> gens;
    bool unit = false;
    mutable std::once_flag gb_once, primary_once, model_once;
    mutable std::optional<GroebnerBasis> gb;
    mutable bool m_primary = false;
    mutable std::optional<GroebnerBasis> model;
  };
  explicit IdealHandle(std::shared_ptr<State> s) : s_(std::move(s)) {}
  std::shared_ptr<State> s_;
};

/// A = (k[x_1..x_n]/J)_m with m = (x_1..x_n).
class LocalRing : public std::enable_shared_from_this<LocalRing> {
 public:
  /// Relations must have zero constant term.
  static LocalRingPtr create(RingPtr ambient, std::vector<Polynomial> relations);
  static LocalRingPtr create(const std::vector<std::string>& vars, Field field,
                             const std::vector<std::string>& relations);

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relations_gb() const { return *j_gb_; }
  /// Krull dimension of k[x]/J.
  int dimension() const { return dim_; }
  /// Ambient ring with one extra variable in front, eliminated first.
  const RingPtr& elimination_ring() const { return elim_ring_; }

  Polynomial parse(const std::string& text) const;
  /// Generators must lie in m. Throws PreconditionFailed otherwise.
  IdealHandle ideal(const std::vector<Polynomial>& gens) const;
  IdealHandle ideal(const std::vector<std::string>& gens) const;
  IdealHandle zero_ideal() const;
  IdealHandle unit_ideal() const;
  IdealHandle maximal_ideal() const;
  /// Computed ideals: any generator with nonzero constant term makes the unit sentinel.
  IdealHandle make_ideal(std::vector<Polynomial> gens) const;

  /// J : m^infinity, as a handle.
  const IdealHandle& saturation() const;
  /// l(W) for W = sat(J)/J.
  long long w_length() const;
  bool depth_positive() const { return w_length() == 0; }

  /// A/W, i.e. relations sat(J).
  LocalRingPtr quotient_by_torsion() const;

 private:
  LocalRing() = default;
  RingPtr ambient_;
  RingPtr elim_ring_;
  std::vector<Polynomial> relations_;
  std::optional<GroebnerBasis> j_gb_;
  int dim_ = 0;
  mutable std::once_flag sat_once_, w_once_;
  mutable std::optional<IdealHandle> sat_;
  mutable long long w_len_ = 0;
};

IdealHandle transport(const IdealHandle& a, const LocalRingPtr& target);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, int k);
IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b);
/// a : f for a single polynomial f; throws ColonByZero when f lies in J.
IdealHandle ideal_colon(const IdealHandle& a, const Polynomial& f);
IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b);
IdealHandle saturate(const IdealHandle& a, const IdealHandle& b);

/// f in a*A_m.
bool contains_local(const IdealHandle& a, const Polynomial& f);
/// b subset of a, locally.
bool contains_local(const IdealHandle& a, const IdealHandle& b);
bool equal_local(const IdealHandle& a, const IdealHandle& b);
/// Same global ideal J + gens.
bool equal_global(const IdealHandle& a, const IdealHandle& b);

/// l(A/a); nullopt when infinite.
std::optional<long long> length(const IdealHandle& a);
/// l(x/y) for y contained in x. Throws NotNested or NotFiniteLength.
long long subquotient_length(const IdealHandle& x, const IdealHandle& y, int d_max = 40);

/// W = H^0_m(A), returned as the handle of sat(J).
IdealHandle compute_W(const LocalRing& ring);

/// e_0(Q) == l(A/Q). Throws NotSOP unless q has d elements and A/Q has finite length.
bool is_cm_certificate(const LocalRingPtr& ring, const std::vector<Polynomial>& q);

}  // namespace filtra
