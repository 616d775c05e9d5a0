#include "filtra/filtration.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "filtra/error.hpp"

namespace filtra {

namespace {

[[noreturn]] void not_admissible(int n, const std::string& clause) {
  raise(ErrorKind::NotAdmissible, "n=" + std::to_string(n) + ": " + clause);
}

std::string seq_string(const std::vector<Polynomial>& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ", ";
    s += seq[i].to_string();
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- Filtration

Filtration Filtration::adic(IdealHandle I, int horizon) {
  auto s = std::make_shared<State>(Kind::Adic, std::move(I));
  return Filtration(std::move(s), horizon);
}

Filtration Filtration::ratliff_rush(IdealHandle I, int horizon, int k_max) {
  auto s = std::make_shared<State>(Kind::RatliffRush, std::move(I));
  s->k_max = k_max;
  return Filtration(std::move(s), horizon);
}

Filtration Filtration::explicit_list(std::vector<IdealHandle> ideals, int horizon) {
  if (ideals.empty()) raise(ErrorKind::PreconditionFailed, "explicit filtration needs I_1");
  for (const auto& I : ideals)
    if (I.ring() != ideals.front().ring()) raise(ErrorKind::ContextMismatch, "ideals over different rings");
  auto s = std::make_shared<State>(Kind::Explicit, ideals.front());
  s->given = std::move(ideals);
  return Filtration(std::move(s), horizon);
}

std::string Filtration::kind_name() const {
  switch (s_->kind) {
    case Kind::Adic: return "adic";
    case Kind::RatliffRush: return "ratliff_rush";
    case Kind::Explicit: return "explicit";
  }
  return "?";
}

Filtration Filtration::with_horizon(int horizon) const { return Filtration(s_, horizon); }

IdealHandle Filtration::base_power(int n) const {
  if (n < 0) raise(ErrorKind::PreconditionFailed, "negative power");
  {
    std::lock_guard lk(s_->mu);
    auto it = s_->powers.find(n);
    if (it != s_->powers.end()) return it->second;
  }
  IdealHandle v = n == 0 ? ring()->unit_ideal() : n == 1 ? s_->base : ideal_product(base_power(n - 1), s_->base);
  std::lock_guard lk(s_->mu);
  return s_->powers.emplace(n, v).first->second;
}

IdealHandle Filtration::get(int n) const {
  if (n < 0 || n > horizon_)
    raise(ErrorKind::HorizonExceeded, "index " + std::to_string(n) + " outside [0, " + std::to_string(horizon_) + "]");
  {
    std::lock_guard lk(s_->mu);
    auto it = s_->memo.find(n);
    if (it != s_->memo.end()) return it->second;
  }
  IdealHandle v = compute(n);
  std::lock_guard lk(s_->mu);
  return s_->memo.emplace(n, v).first->second;
}

IdealHandle Filtration::compute(int n) const {
  if (n == 0) return ring()->unit_ideal();
  switch (s_->kind) {
    case Kind::Adic:
      return base_power(n);
    case Kind::Explicit: {
      if (static_cast<std::size_t>(n) <= s_->given.size()) return s_->given[n - 1];
      return ideal_product(s_->given.front(), get(n - 1));
    }
    case Kind::RatliffRush: {
      // I^{n+k} : I^k as k successive colons by I, until two consecutive agree.
      const IdealHandle& I = s_->base;
      IdealHandle prev = ring()->unit_ideal();
      for (int k = 1; k <= s_->k_max; ++k) {
        IdealHandle cur = base_power(n + k);
        for (int j = 0; j < k; ++j) cur = ideal_colon(cur, I);
        if (k > 1 && equal_local(prev, cur)) return cur;
        prev = cur;
      }
      raise(ErrorKind::RatliffRushNotStabilized,
            "no stabilization within k_max=" + std::to_string(s_->k_max) + " at n=" + std::to_string(n));
    }
  }
  raise(ErrorKind::PreconditionFailed, "unknown filtration kind");
}

Filtration Filtration::transport(const LocalRingPtr& target) const {
  if (s_->kind == Kind::Adic) return adic(filtra::transport(s_->base, target), horizon_);
  std::vector<IdealHandle> list;
  for (int n = 1; n <= horizon_; ++n) list.push_back(filtra::transport(get(n), target));
  return explicit_list(std::move(list), horizon_);
}

// ---------------------------------------------------------------- reductions

IdealHandle sub_ideal(const LocalRingPtr& ring, const std::vector<Polynomial>& seq, std::vector<std::size_t> indices) {
  std::vector<Polynomial> gens;
  for (auto i : indices) gens.push_back(seq.at(i));
  return ring->make_ideal(std::move(gens));
}

IdealHandle colon_or_unit(const IdealHandle& a, const Polynomial& f) {
  const LocalRing& R = *a.ring();
  if (normal_form(f.map_to(R.ambient()), R.relations_gb()).is_zero()) return R.unit_ideal();
  return ideal_colon(a, f);
}

ReductionSystem ReductionSystem::from_generators(const LocalRingPtr& ring, std::vector<Polynomial> gens) {
  for (auto& g : gens) g = g.map_to(ring->ambient());
  IdealHandle Q = ring->ideal(gens);
  return ReductionSystem(std::move(gens), std::move(Q));
}

namespace {

bool is_reduction_of_powers(const IdealHandle& Q, const IdealHandle& I, int limit, int* r_out) {
  IdealHandle pw = I;  // I^r
  for (int r = 1; r <= limit; ++r) {
    IdealHandle next = ideal_product(pw, I);
    if (contains_local(ideal_product(Q, pw), next)) {
      if (r_out) *r_out = r;
      return true;
    }
    pw = next;
  }
  return false;
}

// Least n0 with I_{n+1} = Q I_n for n0 <= n < H, or -1 if it fails at H-1.
int reduction_number(const Filtration& filt, const IdealHandle& Q) {
  const int H = filt.horizon();
  int n0 = H;
  for (int n = H - 1; n >= 0; --n) {
    if (!contains_local(ideal_product(Q, filt.get(n)), filt.get(n + 1))) break;
    n0 = n;
  }
  return n0 == H ? -1 : n0;
}

}  // namespace

AdmissibilityEvidence verify_admissible(const Filtration& filt, ReductionSystem& q, bool strict) {
  AdmissibilityEvidence ev;
  const LocalRingPtr& R = filt.ring();
  const int H = filt.horizon();
  const IdealHandle I1 = filt.get(1);
  if (!I1.is_m_primary()) not_admissible(1, "I_1 is m-primary");
  for (int n = 1; n < H; ++n)
    if (!contains_local(filt.get(n), filt.get(n + 1))) not_admissible(n, "I_{n+1} ⊆ I_n");
  if (filt.kind() != Filtration::Kind::Adic) {
    for (int a = 1; 2 * a <= H; ++a)
      for (int b = a; a + b <= H; ++b) {
        const IdealHandle target = filt.get(a + b);
        for (const auto& g : filt.get(a).generators())
          for (const auto& h : filt.get(b).generators())
            if (!contains_local(target, g * h)) not_admissible(a + b, "I_a I_b ⊆ I_{a+b}");
      }
    for (int n = 1; n <= H; ++n)
      if (!contains_local(filt.get(n), filt.base_power(n))) not_admissible(n, "I^n ⊆ I_n");
  }
  if (q.Q.ring() != R) raise(ErrorKind::ContextMismatch, "reduction over a different ring");
  if (static_cast<int>(q.gens.size()) != R->dimension())
    not_admissible(0, "Q has d = " + std::to_string(R->dimension()) + " generators");
  if (!q.Q.is_m_primary()) not_admissible(0, "Q is m-primary");
  if (!contains_local(I1, q.Q)) not_admissible(1, "Q ⊆ I_1");
  int n0 = reduction_number(filt, q.Q);
  if (n0 < 0) not_admissible(H - 1, "I_{n+1} = Q I_n");
  q.reduction_number = n0;
  ev.n0 = n0;

  auto check_reduces = [&](const IdealHandle& I, const std::string& name) {
    if (is_reduction_of_powers(q.Q, I, H, nullptr)) return;
    std::string msg = "Q is not a reduction of " + name + " within the horizon";
    if (strict) not_admissible(H, msg);
    ev.warnings.push_back(msg);
  };
  if (!contains_local(filt.base(), q.Q)) {
    std::string msg = "Q is not contained in I";
    if (strict) not_admissible(1, msg);
    ev.warnings.push_back(msg);
  } else {
    check_reduces(filt.base(), "I");
  }
  if (!equal_global(filt.base(), I1)) check_reduces(I1, "I_1");
  return ev;
}

ReductionSystem find_reduction(const Filtration& filt, int attempts, std::uint64_t seed) {
  const LocalRingPtr& R = filt.ring();
  const int d = R->dimension();
  if (d < 1) raise(ErrorKind::PreconditionFailed, "find_reduction needs d >= 1");
  const auto& gens = filt.get(1).generators();
  const Field& F = R->ambient()->field();
  long long hi = 100;
  if (!F.is_rational()) hi = static_cast<long long>(std::min<std::uint64_t>(F.characteristic() - 1, 100));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(1, hi);
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    std::vector<Polynomial> cand;
    for (int j = 0; j < d; ++j) {
      Polynomial a = Polynomial::constant(R->ambient(), Coefficient::from_int(F, 0));
      for (const auto& g : gens) a = a + g.scale(Coefficient::from_int(F, dist(rng)));
      cand.push_back(a);
    }
    if (std::any_of(cand.begin(), cand.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    ReductionSystem q = ReductionSystem::from_generators(R, cand);
    if (!q.Q.is_m_primary()) continue;
    int n0 = reduction_number(filt, q.Q);
    if (n0 < 0) continue;
    q.reduction_number = n0;
    q.seed = seed;
    q.attempt = attempt;
    return q;
  }
  raise(ErrorKind::SearchExhausted, "no reduction found in " + std::to_string(attempts) + " attempts");
}

// ---------------------------------------------------------------- conditions

ConditionResult check_C0_dsequence(const LocalRingPtr& ring, const std::vector<Polynomial>& seq) {
  ConditionResult res;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::vector<std::size_t> prefix(i);
    std::iota(prefix.begin(), prefix.end(), 0);
    IdealHandle P = sub_ideal(ring, seq, prefix);
    for (std::size_t j = i; j < seq.size(); ++j) {
      IdealHandle lhs = colon_or_unit(P, seq[i] * seq[j]);
      IdealHandle rhs = colon_or_unit(P, seq[j]);
      if (!equal_local(lhs, rhs)) {
        std::ostringstream w;
        w << "sequence " << seq_string(seq) << ", i=" << i + 1 << ", j=" << j + 1 << ": "
          << lhs.to_string() << " != " << rhs.to_string();
        res.holds = false;
        res.witness = w.str();
        return res;
      }
    }
  }
  return res;
}

ConditionResult check_C1_usd_bounded(const LocalRingPtr& ring, const std::vector<Polynomial>& seq, int power_bound) {
  if (power_bound < 1) raise(ErrorKind::PreconditionFailed, "power_bound must be >= 1");
  std::vector<std::size_t> perm(seq.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> ex(seq.size(), 1);
    while (true) {
      std::vector<Polynomial> s;
      for (std::size_t k = 0; k < seq.size(); ++k) s.push_back(seq[perm[k]].pow(ex[k]));
      ConditionResult r = check_C0_dsequence(ring, s);
      if (!r.holds) return r;
      std::size_t k = 0;
      while (k < ex.size() && ex[k] == power_bound) ex[k++] = 1;
      if (k == ex.size()) break;
      ++ex[k];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

ConditionResult check_C2(const ReductionSystem& q, const Filtration& filt) {
  const LocalRingPtr& R = filt.ring();
  const IdealHandle I1 = filt.get(1);
  for (std::size_t i = 0; i < q.gens.size(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < q.gens.size(); ++k)
      if (k != i) others.push_back(k);
    IdealHandle c = colon_or_unit(sub_ideal(R, q.gens, others), q.gens[i]);
    if (!contains_local(I1, c)) return {false, "i=" + std::to_string(i + 1) + ": " + c.to_string() + " ⊄ I_1"};
  }
  return {};
}

ConditionResult check_C3(const LocalRing& ring) {
  if (ring.depth_positive()) return {};
  return {false, "l(W) = " + std::to_string(ring.w_length())};
}

SuperficialResult check_superficial(const Filtration& filt, const ReductionSystem& q, const Polynomial& a0,
                                    int c_max) {
  const LocalRingPtr& R = filt.ring();
  Polynomial a = a0.map_to(R->ambient());
  if (normal_form(a, R->relations_gb()).is_zero()) raise(ErrorKind::PreconditionFailed, "a is zero in A");
  if (!contains_local(q.Q, a)) raise(ErrorKind::PreconditionFailed, "a is not in Q");
  if (contains_local(ideal_product(R->maximal_ideal(), q.Q), a))
    raise(ErrorKind::PreconditionFailed, "a lies in mQ");
  const int H = filt.horizon();
  for (int c = 1; c <= c_max && c < H; ++c) {
    bool ok = true;
    const IdealHandle Y = filt.get(c);
    const long long lY = *length(Y);
    for (int n = c; n < H && ok; ++n) {
      // I_n lies in both sides, so the lengths decide equality of X ∩ Y with I_n.
      IdealHandle X = ideal_colon(filt.get(n + 1), a);
      long long lhs = *length(filt.get(n));
      long long rhs = *length(X) + lY - *length(ideal_sum(X, Y));
      ok = lhs == rhs;
    }
    if (ok) return {true, c};
  }
  raise(ErrorKind::NoSuperficialWitness, "no c <= " + std::to_string(c_max));
}

}  // namespace filtra
