#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "filtra/filtration.hpp"
#include "filtra/hilbert.hpp"

namespace filtra {

enum class Status { Pass, Fail, NotApplicable };
std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::NotApplicable;
  std::string detail;  // witness on failure, reason when not applicable
};

/// n -> l(A/I_n) for 0 <= n <= horizon. Throws NotMPrimary.
NumericalFunction length_function(const Filtration& filt);
/// n -> l(A/Q^n) for 0 <= n <= horizon.
NumericalFunction power_length_function(const IdealHandle& Q, int horizon);
/// n -> l(A/Q^n I_1) - l(A/I_{n+1}) = l(S_n) for 0 <= n < horizon.
NumericalFunction sally_function(const Filtration& filt, const ReductionSystem& q);

struct InequalityResult {
  long long lhs = 0, rhs = 0, gap = 0;
  bool second_part = true;  // rhs >= 0, informational
};

/// lhs = e_1 - e_1(Q), rhs = 2 e_0 - 2 l(A/I_1) - l(I_1/(I_2+Q)).
InequalityResult check_inequality(const HilbertCoefficients& eI, const HilbertCoefficients& eQ, long long l_A_I1,
                                  long long l_I1_I2Q);

struct ClauseResult {
  bool holds = true;
  int witness_n = -1;  // first failing n, or failing index i for clause 3
  std::string witness;
};

struct Condition2Result {
  ClauseResult clause1, clause2, clause3;
  bool holds() const { return clause1.holds && clause2.holds && clause3.holds; }
};

/// Clause 1: I_{n+2} ⊆ Q^n I_2 + W for 1 <= n <= H-2.
/// Clause 2: (Q^n + W) ∩ (I_{n+1} + W) = Q^n I_1 + W for 1 <= n <= H-1.
/// Clause 3: (a_1..â_i..a_d) : a_i ⊆ I_2 + Q.
Condition2Result check_condition2(const Filtration& filt, const ReductionSystem& q, const IdealHandle& W);

/// Relations between e(I), e(Q) and e(S); s = dim S (0 when S vanishes).
std::vector<CheckResult> check_cor25_relations(const HilbertCoefficients& eI, const HilbertCoefficients& eQ,
                                               const SallyFit& eS, int d, long long l_A_I1);
/// Items (1)-(3) for an equality instance with S != 0; caller gates.
std::vector<CheckResult> check_cor54(const HilbertCoefficients& eI, const HilbertCoefficients& eQ,
                                     const SallyFit& eS, int d, long long l_A_I1, long long l_I1_I2Q);

/// X ∩ Y = Z, using l(A/X∩Y) = l(A/X) + l(A/Y) - l(A/(X+Y)) once Z ⊆ X and Z ⊆ Y.
/// All three must be m-primary.
bool intersection_equals(const IdealHandle& X, const IdealHandle& Y, const IdealHandle& Z);

struct AnalysisOptions {
  int power_bound = 2;
  bool strict = false;
  /// Empty selects everything; otherwise names from all_check_names().
  std::set<std::string> checks;
  bool enabled(const std::string& name) const { return checks.empty() || checks.count(name) > 0; }
  /// When set, receives the name of the stage being computed.
  std::string* stage = nullptr;
};

const std::vector<std::string>& all_check_names();

/// Everything computed once per instance and shared by the checkers.
struct Instance {
  Instance(Filtration f, ReductionSystem r, IdealHandle w) : filt(std::move(f)), q(std::move(r)), W(std::move(w)) {}
  Filtration filt;
  ReductionSystem q;
  IdealHandle W;
  int d = 0;
  int horizon = 0;
  long long w_length = 0;
  AdmissibilityEvidence admissible;

  ConditionResult c0, c1, c2, c3;
  int power_bound = 2;

  std::vector<IdealHandle> Qn;    // Q^n, 0..H
  std::vector<IdealHandle> QnI1;  // Q^n I_1, 0..H-1
  NumericalFunction h, hQ, hQI1, g;
  long long l_A_I1 = 0, l_A_I2Q = 0, l_I1_I2Q = 0, l_A_Q = 0;
  HilbertCoefficients eI, eQ;
  SallyFit eS;
  InequalityResult inequality;
  bool equality_holds = false;

  bool c01() const { return c0.holds && c2.holds; }
  bool c12() const { return c1.holds && c2.holds; }
};

/// Verifies admissibility, evaluates (C0)-(C3), the length tables and the fits.
Instance prepare_instance(const Filtration& filt, ReductionSystem q, const AnalysisOptions& opts = {});

CheckResult check_prop24_identity(const Instance& in);
CheckResult check_fiber_cone_poly(const Instance& in);
CheckResult check_reduction_to_C(const Instance& in);
CheckResult check_trung_multiplicity(const Instance& in);
CheckResult check_remark_I2_in_Q(const Instance& in);
/// I_1 = Q: e_1 = e_1(Q), A Cohen-Macaulay and the filtration is adic.
CheckResult check_remark_I1_eq_Q(const Instance& in);
/// l(S_n) against l(I_{n+1} / Q^n I_1) by span closure, for small n.
CheckResult check_sally_additivity(const Instance& in);
/// W ⊆ I_2, I_{n+2} ⊆ Q^n I_1, Q^n ∩ I_{n+1} = Q^n I_1 and the e_i identities.
std::vector<CheckResult> check_equality_consequences(const Instance& in, const Condition2Result& c2);

struct H0Pieces {
  std::vector<long long> pieces;  // index n, 0..H-1
  bool sums_to_w = false;
  bool cross_checked = false;
};
/// Predicted l([H^0(G)]_n) from W. Caller gates on equality.
H0Pieces h0_graded_pieces(const Filtration& filt, const IdealHandle& W);

struct VerdictReport {
  // ring
  std::vector<std::string> vars, relations;
  std::string field;
  int d = 0;
  long long w_length = 0;
  bool depth_positive = true;
  // filtration and reduction
  std::string filtration_kind;
  int horizon = 0;
  std::vector<std::string> reduction_gens;
  int reduction_number = 0;
  std::optional<std::uint64_t> seed;
  int attempt = 0;
  // conditions
  ConditionResult c0, c1, c2, c3;
  int power_bound = 2;
  std::optional<int> superficial_c;
  // numerics
  NumericalFunction h, hQ, hQI1, g;
  long long l_A_I1 = 0, l_A_I2Q = 0, l_I1_I2Q = 0, l_A_Q = 0;
  HilbertCoefficients eI, eQ;
  SallyFit eS;
  InequalityResult inequality;
  bool equality_holds = false;
  bool master_inequality_ok = true;
  Condition2Result condition2;
  Status equivalence = Status::NotApplicable;
  std::vector<CheckResult> checks;
  std::optional<H0Pieces> h0;
  std::vector<std::string> warnings;

  bool all_applicable_pass() const;
  /// Equivalence violated or gap < 0.
  bool mathematical_violation() const;
};

/// Full pipeline on a prepared instance; never throws on check failures.
VerdictReport build_report(const Instance& in, const AnalysisOptions& opts = {});
/// As build_report, then throws EquivalenceViolation when the two sides disagree.
VerdictReport verify_theorem_equivalence(const Filtration& filt, const ReductionSystem& q,
                                         const AnalysisOptions& opts = {});

}  // namespace filtra
