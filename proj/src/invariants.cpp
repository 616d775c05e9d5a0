#include "filtra/invariants.hpp"

#include <sstream>

#include "filtra/error.hpp"

namespace filtra {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not_applicable";
  }
  return "?";
}

namespace {

long long len(const IdealHandle& a) {
  auto l = length(a);
  if (!l) raise(ErrorKind::NotMPrimary, "A/" + a.to_string() + " has infinite length");
  return *l;
}

CheckResult na(std::string name, std::string why) { return {std::move(name), Status::NotApplicable, std::move(why)}; }

CheckResult verdict(std::string name, bool ok, std::string witness = {}) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, ok ? std::string{} : std::move(witness)};
}

long long coeff(const std::vector<long long>& e, int i) {
  return i >= 0 && i < static_cast<int>(e.size()) ? e[i] : 0;
}

std::string eq_text(long long lhs, long long rhs) { return std::to_string(lhs) + " != " + std::to_string(rhs); }

struct Sides {
  HilbertCoefficients eI, eQ;
  long long l_A_I1 = 0, l_I1_I2Q = 0;
  InequalityResult ineq;
};

Sides equality_sides(const Filtration& filt, const IdealHandle& Q, int d) {
  Sides s;
  s.eI = fit_hilbert(length_function(filt), d);
  s.eQ = fit_hilbert(power_length_function(Q, filt.horizon()), d);
  s.l_A_I1 = len(filt.get(1));
  s.l_I1_I2Q = len(ideal_sum(filt.get(2), Q)) - s.l_A_I1;
  s.ineq = check_inequality(s.eI, s.eQ, s.l_A_I1, s.l_I1_I2Q);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- numerics

NumericalFunction length_function(const Filtration& filt) {
  NumericalFunction h{{}, "A/I_n"};
  for (int n = 0; n <= filt.horizon(); ++n) h.values.push_back(len(filt.get(n)));
  return h;
}

NumericalFunction power_length_function(const IdealHandle& Q, int horizon) {
  NumericalFunction h{{}, "A/Q^n"};
  IdealHandle p = Q.ring()->unit_ideal();
  for (int n = 0; n <= horizon; ++n) {
    h.values.push_back(len(p));
    p = ideal_product(p, Q);
  }
  return h;
}

NumericalFunction sally_function(const Filtration& filt, const ReductionSystem& q) {
  NumericalFunction g{{}, "S_n"};
  IdealHandle p = filt.get(1);
  for (int n = 0; n < filt.horizon(); ++n) {
    g.values.push_back(len(p) - len(filt.get(n + 1)));
    p = ideal_product(p, q.Q);
  }
  return g;
}

InequalityResult check_inequality(const HilbertCoefficients& eI, const HilbertCoefficients& eQ, long long l_A_I1,
                                  long long l_I1_I2Q) {
  InequalityResult r;
  r.lhs = coeff(eI.e, 1) - coeff(eQ.e, 1);
  r.rhs = 2 * coeff(eI.e, 0) - 2 * l_A_I1 - l_I1_I2Q;
  r.gap = r.lhs - r.rhs;
  r.second_part = r.rhs >= 0;
  return r;
}

bool intersection_equals(const IdealHandle& X, const IdealHandle& Y, const IdealHandle& Z) {
  if (!contains_local(X, Z) || !contains_local(Y, Z)) return false;
  return len(Z) == len(X) + len(Y) - len(ideal_sum(X, Y));
}

Condition2Result check_condition2(const Filtration& filt, const ReductionSystem& q, const IdealHandle& W) {
  Condition2Result r;
  const int H = filt.horizon();
  const IdealHandle I1 = filt.get(1), I2 = filt.get(2);
  IdealHandle Qn = q.Q;
  for (int n = 1; n <= H - 1; ++n, Qn = ideal_product(Qn, q.Q)) {
    if (r.clause1.holds && n <= H - 2) {
      IdealHandle rhs = ideal_sum(ideal_product(Qn, I2), W);
      if (!contains_local(rhs, filt.get(n + 2))) {
        r.clause1 = {false, n, "I_" + std::to_string(n + 2) + " ⊄ Q^" + std::to_string(n) + " I_2 + W"};
      }
    }
    if (r.clause2.holds) {
      IdealHandle X = ideal_sum(Qn, W), Y = ideal_sum(filt.get(n + 1), W);
      IdealHandle Z = ideal_sum(ideal_product(Qn, I1), W);
      if (!intersection_equals(X, Y, Z)) {
        r.clause2 = {false, n,
                     "(Q^" + std::to_string(n) + " + W) ∩ (I_" + std::to_string(n + 1) + " + W) != Q^" +
                         std::to_string(n) + " I_1 + W"};
      }
    }
  }
  const IdealHandle target = ideal_sum(I2, q.Q);
  for (std::size_t i = 0; i < q.gens.size() && r.clause3.holds; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < q.gens.size(); ++k)
      if (k != i) others.push_back(k);
    IdealHandle c = colon_or_unit(sub_ideal(filt.ring(), q.gens, others), q.gens[i]);
    if (!contains_local(target, c))
      r.clause3 = {false, static_cast<int>(i + 1),
                   "i=" + std::to_string(i + 1) + ": " + c.to_string() + " ⊄ " + target.to_string()};
  }
  return r;
}

std::vector<CheckResult> check_cor25_relations(const HilbertCoefficients& eI, const HilbertCoefficients& eQ,
                                               const SallyFit& eS, int d, long long l_A_I1) {
  std::vector<CheckResult> out;
  const auto& e = eI.e;
  const auto& q = eQ.e;
  const int s = eS.dim;
  auto S = [&](int i) { return s > 0 ? coeff(eS.coeffs.e, i) : 0; };
  if (s == d) {
    long long rhs = coeff(e, 0) + coeff(q, 1) - l_A_I1 + S(0);
    out.push_back(verdict("cor25_1a", coeff(e, 1) == rhs, eq_text(coeff(e, 1), rhs)));
    for (int i = 2; i <= d; ++i) {
      long long r = coeff(q, i - 1) + coeff(q, i) + S(i - 1);
      out.push_back(verdict("cor25_1b_i" + std::to_string(i), coeff(e, i) == r, eq_text(coeff(e, i), r)));
    }
  } else {
    long long rhs = coeff(e, 0) + coeff(q, 1) - l_A_I1;
    out.push_back(verdict("cor25_2a", coeff(e, 1) == rhs, eq_text(coeff(e, 1), rhs)));
    for (int i = 2; i <= d; ++i) {
      long long r = coeff(q, i - 1) + coeff(q, i);
      std::string name = "cor25_2b_i" + std::to_string(i);
      if (i >= d - s + 1) {
        r += ((d - s) % 2 ? -1 : 1) * S(i - d + s - 1);
        name = "cor25_2c_i" + std::to_string(i);
      }
      out.push_back(verdict(name, coeff(e, i) == r, eq_text(coeff(e, i), r)));
    }
  }
  return out;
}

std::vector<CheckResult> check_cor54(const HilbertCoefficients& eI, const HilbertCoefficients& eQ,
                                     const SallyFit& eS, int d, long long l_A_I1, long long l_I1_I2Q) {
  std::vector<CheckResult> out;
  const auto& e = eI.e;
  auto S = [&](int i) { return eS.dim > 0 ? coeff(eS.coeffs.e, i) : 0; };
  long long r1 = coeff(e, 0) - l_A_I1 - l_I1_I2Q;
  out.push_back(verdict("cor54_1", S(0) == r1, eq_text(S(0), r1)));
  if (d >= 2) {
    long long r2 = coeff(e, 1) - coeff(e, 0) + l_A_I1;
    out.push_back(verdict("cor54_2", S(1) == r2, eq_text(S(1), r2)));
  } else {
    out.push_back(na("cor54_2", "d < 2"));
  }
  if (d >= 3) {
    for (int i = 2; i <= d - 1; ++i) {
      long long r = coeff(eQ.e, i - 1) + coeff(eQ.e, i);
      out.push_back(verdict("cor54_3_i" + std::to_string(i), S(i) == r, eq_text(S(i), r)));
    }
  } else {
    out.push_back(na("cor54_3", "d < 3"));
  }
  return out;
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "conditions",     "superficial", "condition2",     "equivalence",    "consequences",
      "prop24",         "fiber_cone",  "cor25",          "cor54",          "reduction_to_C",
      "trung",          "remark_I2_in_Q", "remark_I1_eq_Q", "sally_additivity", "h0_pieces"};
  return names;
}

// ---------------------------------------------------------------- instance

Instance prepare_instance(const Filtration& filt, ReductionSystem q, const AnalysisOptions& opts) {
  const LocalRingPtr& R = filt.ring();
  if (R->dimension() < 1) raise(ErrorKind::PreconditionFailed, "A has dimension 0");
  Instance in(filt, std::move(q), compute_W(*R));
  in.d = R->dimension();
  in.horizon = filt.horizon();
  in.w_length = R->w_length();
  in.power_bound = opts.power_bound;
  auto stage = [&](const char* name) {
    if (opts.stage) *opts.stage = name;
  };
  stage("admissibility");
  in.admissible = verify_admissible(in.filt, in.q, opts.strict);

  stage("conditions");
  if (opts.enabled("conditions")) {
    in.c0 = check_C0_dsequence(R, in.q.gens);
    in.c1 = check_C1_usd_bounded(R, in.q.gens, opts.power_bound);
    in.c2 = check_C2(in.q, filt);
    in.c3 = check_C3(*R);
  }

  stage("lengths");
  const int H = in.horizon;
  const IdealHandle I1 = filt.get(1);
  in.Qn.push_back(R->unit_ideal());
  for (int n = 1; n <= H; ++n) in.Qn.push_back(ideal_product(in.Qn.back(), in.q.Q));
  for (int n = 0; n < H; ++n) in.QnI1.push_back(n == 0 ? I1 : ideal_product(in.QnI1.back(), in.q.Q));

  in.h = length_function(filt);
  in.hQ = {{}, "A/Q^n"};
  for (const auto& p : in.Qn) in.hQ.values.push_back(len(p));
  in.hQI1 = {{}, "A/Q^n I_1"};
  for (const auto& p : in.QnI1) in.hQI1.values.push_back(len(p));
  in.g = {{}, "S_n"};
  for (int n = 0; n < H; ++n) in.g.values.push_back(in.hQI1.values[n] - in.h.values[n + 1]);

  in.l_A_I1 = in.h.values[1];
  in.l_A_Q = in.hQ.values[1];
  in.l_A_I2Q = len(ideal_sum(filt.get(2), in.q.Q));
  in.l_I1_I2Q = in.l_A_I2Q - in.l_A_I1;

  stage("fits");
  in.eI = fit_hilbert(in.h, in.d);
  in.eQ = fit_hilbert(in.hQ, in.d);
  in.eS = fit_sally(in.g, in.d);
  in.inequality = check_inequality(in.eI, in.eQ, in.l_A_I1, in.l_I1_I2Q);
  in.equality_holds = in.inequality.gap == 0;
  return in;
}

// ---------------------------------------------------------------- checkers

CheckResult check_prop24_identity(const Instance& in) {
  if (!in.c01()) return na("prop24", "requires C0 and C2");
  const int d = in.d;
  const auto& e = in.eI.e;
  const auto& q = in.eQ.e;
  std::string bad;
  for (int n = 0; n < in.horizon; ++n) {
    long long v = coeff(e, 0) * binomial(n + d, d) - (coeff(e, 0) + coeff(q, 1) - in.l_A_I1) * binomial(n + d - 1, d - 1);
    for (int i = 2; i <= d; ++i) v += (i % 2 ? -1 : 1) * (coeff(q, i - 1) + coeff(q, i)) * binomial(n + d - i, d - i);
    v -= in.g.values[n];
    if (v != in.h.values[n + 1]) bad += (bad.empty() ? "n=" : "; n=") + std::to_string(n) + ": " + eq_text(in.h.values[n + 1], v);
  }
  return verdict("prop24", bad.empty(), bad);
}

CheckResult check_fiber_cone_poly(const Instance& in) {
  if (!in.c01()) return na("fiber_cone", "requires C0 and C2");
  for (int n = 0; n < in.horizon; ++n) {
    long long lhs = in.hQI1.values[n] - in.hQ.values[n];
    long long rhs = in.l_A_I1 * binomial(n + in.d - 1, in.d - 1);
    if (lhs != rhs) return verdict("fiber_cone", false, "n=" + std::to_string(n) + ": " + eq_text(lhs, rhs));
  }
  return verdict("fiber_cone", true);
}

CheckResult check_reduction_to_C(const Instance& in) {
  const LocalRingPtr& R = in.filt.ring();
  const bool w_in = contains_local(ideal_sum(in.filt.get(2), in.q.Q), in.W);
  if (in.w_length == 0) return verdict("reduction_to_C", true);
  LocalRingPtr C = R->quotient_by_torsion();
  Filtration fc = in.filt.transport(C);
  IdealHandle QC = C->ideal(in.q.gens);
  Sides s = equality_sides(fc, QC, in.d);
  const bool eq_C = s.ineq.gap == 0;
  const bool ok = in.equality_holds == (eq_C && w_in);
  std::ostringstream w;
  w << "equality in A: " << in.equality_holds << ", in C: " << eq_C << ", W ⊆ I_2+Q: " << w_in;
  CheckResult r = verdict("reduction_to_C", ok, w.str());
  if (ok) r.detail = w.str();
  return r;
}

CheckResult check_trung_multiplicity(const Instance& in) {
  if (!in.c1.holds) return na("trung", "requires C1");
  const LocalRingPtr& R = in.filt.ring();
  LocalRingPtr C = in.w_length == 0 ? R : R->quotient_by_torsion();
  const int d = in.d;
  std::vector<Polynomial> prefix(in.q.gens.begin(), in.q.gens.end() - 1);
  IdealHandle QC = C->ideal(in.q.gens);
  IdealHandle K = colon_or_unit(C->ideal(prefix), in.q.gens[d - 1]);
  long long lq = len(QC);
  long long sub = subquotient_length(ideal_sum(K, QC), QC);
  long long e0 = coeff(in.eQ.e, 0);
  std::string detail = std::to_string(e0) + " = " + std::to_string(lq) + " - " + std::to_string(sub);
  CheckResult r = verdict("trung", e0 == lq - sub, detail);
  r.detail = detail;
  return r;
}

CheckResult check_remark_I2_in_Q(const Instance& in) {
  if (!in.equality_holds) return na("remark_I2_in_Q", "equality does not hold");
  if (!contains_local(in.q.Q, in.filt.get(2))) return na("remark_I2_in_Q", "I_2 ⊄ Q");
  if (!is_cm_certificate(in.filt.ring(), in.q.gens)) return verdict("remark_I2_in_Q", false, "A is not Cohen-Macaulay");
  for (int n = 0; n < in.horizon; ++n)
    if (in.g.values[n] != 0) return verdict("remark_I2_in_Q", false, "l(S_" + std::to_string(n) + ") != 0");
  for (int n = 1; n < in.horizon; ++n)
    if (!equal_local(in.filt.get(n + 1), in.QnI1[n]))
      return verdict("remark_I2_in_Q", false, "I_" + std::to_string(n + 1) + " != Q^" + std::to_string(n) + " I_1");
  return verdict("remark_I2_in_Q", true);
}

CheckResult check_remark_I1_eq_Q(const Instance& in) {
  const IdealHandle I1 = in.filt.get(1);
  if (!equal_local(I1, in.q.Q)) return na("remark_I1_eq_Q", "I_1 != Q");
  if (!in.equality_holds) return na("remark_I1_eq_Q", "equality does not hold");
  if (coeff(in.eI.e, 1) != coeff(in.eQ.e, 1))
    return verdict("remark_I1_eq_Q", false, "e_1 " + eq_text(coeff(in.eI.e, 1), coeff(in.eQ.e, 1)));
  if (!is_cm_certificate(in.filt.ring(), in.q.gens)) return verdict("remark_I1_eq_Q", false, "A is not Cohen-Macaulay");
  for (int n = 2; n <= in.horizon; ++n)
    if (!equal_local(in.filt.get(n), ideal_power(I1, n)))
      return verdict("remark_I1_eq_Q", false, "I_" + std::to_string(n) + " != I_1^" + std::to_string(n));
  return verdict("remark_I1_eq_Q", true);
}

CheckResult check_sally_additivity(const Instance& in) {
  const int top = std::min(in.horizon - 1, 3);
  for (int n = 1; n <= top; ++n) {
    long long s = subquotient_length(in.filt.get(n + 1), in.QnI1[n]);
    if (s != in.g.values[n])
      return verdict("sally_additivity", false, "n=" + std::to_string(n) + ": " + eq_text(s, in.g.values[n]));
  }
  return verdict("sally_additivity", true);
}

std::vector<CheckResult> check_equality_consequences(const Instance& in, const Condition2Result& c2) {
  std::vector<CheckResult> out;
  const int d = in.d;
  const auto& e = in.eI.e;
  const auto& q = in.eQ.e;
  const bool eq = in.equality_holds;
  const bool gated = eq && in.c12();
  const std::string why = !eq ? "equality does not hold" : "requires C1 and C2";

  if (gated) {
    out.push_back(verdict("W_in_I2", contains_local(in.filt.get(2), in.W), in.W.to_string() + " ⊄ I_2"));
    out.push_back(verdict("I_n+2_in_QnI2+W", c2.clause1.holds, c2.clause1.witness));
  } else {
    out.push_back(na("W_in_I2", why));
    out.push_back(na("I_n+2_in_QnI2+W", why));
  }

  if (gated && in.c3.holds) {
    std::string w1, w2;
    bool ok1 = true, ok2 = true;
    for (int n = 0; n + 2 <= in.horizon && ok1; ++n)
      if (!contains_local(in.QnI1[n], in.filt.get(n + 2))) {
        ok1 = false;
        w1 = "n=" + std::to_string(n);
      }
    for (int n = 1; n < in.horizon && ok2; ++n)
      if (!intersection_equals(in.Qn[n], in.filt.get(n + 1), in.QnI1[n])) {
        ok2 = false;
        w2 = "n=" + std::to_string(n);
      }
    out.push_back(verdict("I_n+2_in_QnI1", ok1, w1));
    out.push_back(verdict("Qn_cap_I_n+1", ok2, w2));
    out.push_back(verdict("colon_in_I2+Q", c2.clause3.holds, c2.clause3.witness));
  } else {
    const std::string w = gated ? "requires C3" : why;
    out.push_back(na("I_n+2_in_QnI1", w));
    out.push_back(na("Qn_cap_I_n+1", w));
    out.push_back(na("colon_in_I2+Q", w));
  }

  if (gated && d >= 2) {
    long long r = coeff(q, 1) + coeff(q, 2) + coeff(e, 1) - coeff(e, 0) + in.l_A_I1;
    out.push_back(verdict("e2_identity", coeff(e, 2) == r, eq_text(coeff(e, 2), r)));
  } else {
    out.push_back(na("e2_identity", gated ? "d < 2" : why));
  }
  if (gated && d >= 3) {
    for (int i = 3; i <= d; ++i) {
      long long r = coeff(q, i - 2) + 2 * coeff(q, i - 1) + coeff(q, i);
      out.push_back(verdict("ei_identity_i" + std::to_string(i), coeff(e, i) == r, eq_text(coeff(e, i), r)));
    }
  } else {
    out.push_back(na("ei_identity", gated ? "d < 3" : why));
  }
  return out;
}

H0Pieces h0_graded_pieces(const Filtration& filt, const IdealHandle& W) {
  H0Pieces out;
  const int H = filt.horizon();
  const long long lw = filt.ring()->w_length();
  // l(W / (I_n ∩ W)) = l(A/I_n) - l(A/(I_n + W))
  std::vector<long long> quot(H + 1, 0);
  for (int n = 0; n <= H; ++n) quot[n] = len(filt.get(n)) - len(ideal_sum(filt.get(n), W));
  out.pieces.assign(H, 0);
  if (H > 3) out.pieces[2] = quot[3];
  for (int n = 3; n < H; ++n) out.pieces[n] = quot[n + 1] - quot[n];
  long long sum = 0;
  for (auto v : out.pieces) sum += v;
  out.sums_to_w = sum == lw;
  out.cross_checked = true;
  for (int n = 3; n < H && n <= 5; ++n) {
    long long s = lw == 0 ? 0
                          : subquotient_length(ideal_intersect(filt.get(n), W), ideal_intersect(filt.get(n + 1), W));
    out.cross_checked = out.cross_checked && s == out.pieces[n];
  }
  return out;
}

// ---------------------------------------------------------------- verdict

bool VerdictReport::all_applicable_pass() const {
  if (mathematical_violation()) return false;
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

bool VerdictReport::mathematical_violation() const {
  return equivalence == Status::Fail || !master_inequality_ok;
}

VerdictReport build_report(const Instance& in, const AnalysisOptions& opts) {
  if (opts.stage) *opts.stage = "checks";
  VerdictReport r;
  const LocalRingPtr& R = in.filt.ring();
  for (const auto& v : R->ambient()->vars()) r.vars.push_back(v);
  for (const auto& p : R->relations()) r.relations.push_back(p.to_string());
  r.field = R->ambient()->field().to_string();
  r.d = in.d;
  r.w_length = in.w_length;
  r.depth_positive = in.w_length == 0;
  r.filtration_kind = in.filt.kind_name();
  r.horizon = in.horizon;
  for (const auto& g : in.q.gens) r.reduction_gens.push_back(g.to_string());
  r.reduction_number = in.q.reduction_number;
  r.seed = in.q.seed;
  r.attempt = in.q.attempt;
  r.c0 = in.c0;
  r.c1 = in.c1;
  r.c2 = in.c2;
  r.c3 = in.c3;
  r.power_bound = in.power_bound;
  r.h = in.h;
  r.hQ = in.hQ;
  r.hQI1 = in.hQI1;
  r.g = in.g;
  r.l_A_I1 = in.l_A_I1;
  r.l_A_I2Q = in.l_A_I2Q;
  r.l_I1_I2Q = in.l_I1_I2Q;
  r.l_A_Q = in.l_A_Q;
  r.eI = in.eI;
  r.eQ = in.eQ;
  r.eS = in.eS;
  r.inequality = in.inequality;
  r.equality_holds = in.equality_holds;
  r.master_inequality_ok = in.inequality.gap >= 0;
  r.warnings = in.admissible.warnings;
  if (!in.inequality.second_part)
    r.warnings.push_back("second inequality: rhs = " + std::to_string(in.inequality.rhs) + " < 0");

  if (opts.enabled("superficial")) {
    try {
      r.superficial_c = check_superficial(in.filt, in.q, in.q.gens.front()).c;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSuperficialWitness && e.kind() != ErrorKind::PreconditionFailed) throw;
      r.warnings.push_back(std::string("superficial: ") + e.what());
    }
  }

  if (opts.enabled("condition2") || opts.enabled("equivalence") || opts.enabled("consequences"))
    r.condition2 = check_condition2(in.filt, in.q, in.W);
  if (opts.enabled("equivalence")) {
    if (in.c12())
      r.equivalence = in.equality_holds == r.condition2.holds() ? Status::Pass : Status::Fail;
    else
      r.equivalence = Status::NotApplicable;
  }
  if (opts.enabled("consequences"))
    for (auto& c : check_equality_consequences(in, r.condition2)) r.checks.push_back(std::move(c));
  if (opts.enabled("prop24")) r.checks.push_back(check_prop24_identity(in));
  if (opts.enabled("fiber_cone")) r.checks.push_back(check_fiber_cone_poly(in));
  if (opts.enabled("cor25")) {
    if (in.c01())
      for (auto& c : check_cor25_relations(in.eI, in.eQ, in.eS, in.d, in.l_A_I1)) r.checks.push_back(std::move(c));
    else
      r.checks.push_back(na("cor25", "requires C0 and C2"));
  }
  if (opts.enabled("cor54")) {
    if (!in.equality_holds)
      r.checks.push_back(na("cor54", "equality does not hold"));
    else if (in.eS.vanishes)
      r.checks.push_back(na("cor54", "S = 0"));
    else if (!(in.c12() && in.c3.holds))
      r.checks.push_back(na("cor54", "requires C1, C2 and C3"));
    else
      for (auto& c : check_cor54(in.eI, in.eQ, in.eS, in.d, in.l_A_I1, in.l_I1_I2Q)) r.checks.push_back(std::move(c));
  }
  if (opts.enabled("reduction_to_C")) r.checks.push_back(check_reduction_to_C(in));
  if (opts.enabled("trung")) r.checks.push_back(check_trung_multiplicity(in));
  if (opts.enabled("remark_I2_in_Q")) r.checks.push_back(check_remark_I2_in_Q(in));
  if (opts.enabled("remark_I1_eq_Q")) r.checks.push_back(check_remark_I1_eq_Q(in));
  if (opts.enabled("sally_additivity")) r.checks.push_back(check_sally_additivity(in));
  if (opts.enabled("h0_pieces")) {
    if (in.equality_holds) {
      r.h0 = h0_graded_pieces(in.filt, in.W);
      r.checks.push_back(verdict("h0_pieces", r.h0->sums_to_w && r.h0->cross_checked,
                                 "pieces do not account for l(W)"));
    } else {
      r.checks.push_back(na("h0_pieces", "equality does not hold"));
    }
  }
  return r;
}

VerdictReport verify_theorem_equivalence(const Filtration& filt, const ReductionSystem& q,
                                         const AnalysisOptions& opts) {
  Instance in = prepare_instance(filt, q, opts);
  VerdictReport r = build_report(in, opts);
  if (r.equivalence == Status::Fail)
    raise(ErrorKind::EquivalenceViolation, "gap = " + std::to_string(r.inequality.gap) + " but condition (2) " +
                                               (r.condition2.holds() ? "holds" : "fails"));
  return r;
}

}  // namespace filtra
