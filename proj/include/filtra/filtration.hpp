#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "filtra/local_ring.hpp"

namespace filtra {

/// {I_n}: adic (I_n = I^n), Ratliff-Rush closure of the powers, or an explicit
/// list I_1..I_k continued by I_{n+1} = I_1 I_n. Memoized and shareable.
class Filtration {
 public:
  enum class Kind { Adic, RatliffRush, Explicit };

  static Filtration adic(IdealHandle I, int horizon);
  static Filtration ratliff_rush(IdealHandle I, int horizon, int k_max = 10);
  /// ideals[0] is I_1.
  static Filtration explicit_list(std::vector<IdealHandle> ideals, int horizon);

  Kind kind() const { return s_->kind; }
  std::string kind_name() const;
  int horizon() const { return horizon_; }
  const LocalRingPtr& ring() const { return s_->base.ring(); }
  /// I for adic and Ratliff-Rush; I_1 for explicit.
  const IdealHandle& base() const { return s_->base; }

  /// 0 <= n <= horizon. Throws HorizonExceeded, RatliffRushNotStabilized.
  IdealHandle get(int n) const;
  /// I^n of the base ideal, without horizon limit.
  IdealHandle base_power(int n) const;

  Filtration with_horizon(int horizon) const;
  /// Image filtration {I_n + K / K} on a quotient ring with the same ambient ring.
  Filtration transport(const LocalRingPtr& target) const;

 private:
  struct State {
    State(Kind k, IdealHandle b) : kind(k), base(std::move(b)) {}
    Kind kind;
    IdealHandle base;
    std::vector<IdealHandle> given;
    int k_max = 10;
    std::mutex mu;
    std::map<int, IdealHandle> memo;
    std::map<int, IdealHandle> powers;
  };
  Filtration(std::shared_ptr<State> s, int h) : s_(std::move(s)), horizon_(h) {}
  IdealHandle compute(int n) const;
  std::shared_ptr<State> s_;
  int horizon_;
};

struct ReductionSystem {
  ReductionSystem(std::vector<Polynomial> g, IdealHandle q) : gens(std::move(g)), Q(std::move(q)) {}
  std::vector<Polynomial> gens;  // a_1..a_d
  IdealHandle Q;
  int reduction_number = 0;       // least n0 with I_{n+1} = Q I_n for n0 <= n < horizon
  std::optional<std::uint64_t> seed;
  int attempt = 0;                // 1-based attempt that succeeded in a search

  static ReductionSystem from_generators(const LocalRingPtr& ring, std::vector<Polynomial> gens);
};

struct AdmissibilityEvidence {
  int n0 = 0;
  std::vector<std::string> warnings;
};

/// Checks the filtration axioms up to the horizon and returns the reduction
/// number. With strict set, Q must also be a reduction of I and I_1.
/// Throws NotAdmissible (message names n and clause).
AdmissibilityEvidence verify_admissible(const Filtration& filt, ReductionSystem& q, bool strict = false);

/// Random linear combinations of the generators of I_1. Throws SearchExhausted.
ReductionSystem find_reduction(const Filtration& filt, int attempts, std::uint64_t seed);

struct ConditionResult {
  bool holds = true;
  std::string witness;  // first failing instance
};

/// (a_1..a_{i-1}) : a_i a_j = (a_1..a_{i-1}) : a_j for all i <= j.
ConditionResult check_C0_dsequence(const LocalRingPtr& ring, const std::vector<Polynomial>& seq);
/// Every permutation with every exponent vector in [1, power_bound]^d is a d-sequence.
ConditionResult check_C1_usd_bounded(const LocalRingPtr& ring, const std::vector<Polynomial>& seq,
                                     int power_bound);
/// (a_1..â_i..a_d) : a_i lies in I_1.
ConditionResult check_C2(const ReductionSystem& q, const Filtration& filt);
/// depth A > 0.
ConditionResult check_C3(const LocalRing& ring);

struct SuperficialResult {
  bool holds = false;
  int c = 0;
};

/// Finds c <= c_max with (I_{n+1} : a) ∩ I_c = I_n for c <= n < horizon.
/// Throws PreconditionFailed unless a lies in Q \ mQ; NoSuperficialWitness otherwise.
SuperficialResult check_superficial(const Filtration& filt, const ReductionSystem& q, const Polynomial& a,
                                    int c_max = 4);

/// The ideal (a_i : i in indices) of A.
IdealHandle sub_ideal(const LocalRingPtr& ring, const std::vector<Polynomial>& seq, std::vector<std::size_t> indices);
/// a : f, with a : 0 = (1).
IdealHandle colon_or_unit(const IdealHandle& a, const Polynomial& f);

}  // namespace filtra
