#include "filtra/local_ring.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "filtra/error.hpp"
#include "filtra/hilbert.hpp"
#include "filtra/parser.hpp"

namespace filtra {

namespace {

std::vector<Polynomial> with_relations(const LocalRing& R, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = R.relations_gb().generators();
  all.insert(all.end(), gens.begin(), gens.end());
  return all;
}

bool is_zero_dimensional(const GroebnerBasis& gb) { return standard_monomials(gb).zero_dimensional(); }

// Every variable is nilpotent modulo gb, i.e. V(gb) is the origin alone.
bool supported_at_origin(const GroebnerBasis& gb, std::uint64_t dim) {
  const RingPtr& R = gb.ring();
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    Polynomial x = Polynomial::variable(R, i);
    Polynomial p = normal_form(x, gb);
    for (std::uint64_t k = 1; k <= dim && !p.is_zero(); ++k) p = normal_form(x * p, gb);
    if (!p.is_zero()) return false;
  }
  return true;
}

std::vector<Polynomial> monomials_of_degree(const RingPtr& R, unsigned deg) {
  std::vector<Polynomial> out;
  std::vector<long long> e(R->nvars(), 0);
  Coefficient one = Coefficient::one(R->field());
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == R->nvars()) {
      e[i] = left;
      out.push_back(Polynomial::monomial(R, Monomial::from_exponents(e), one));
      e[i] = 0;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (R->nvars() == 0) return out;
  rec(rec, 0, deg);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- IdealHandle

const GroebnerBasis& IdealHandle::gb() const {
  std::call_once(s_->gb_once, [this] {
    const LocalRing& R = *s_->ring;
    if (s_->unit)
      s_->gb = buchberger(R.ambient(), std::vector<Polynomial>{Polynomial::from_int(R.ambient(), 1)});
    else
      s_->gb = groebner_cached(R.ambient(), with_relations(R, s_->gens));
  });
  return *s_->gb;
}

bool IdealHandle::is_m_primary() const {
  std::call_once(s_->primary_once, [this] {
    if (s_->unit) {
      s_->m_primary = false;
    } else if (is_zero_dimensional(gb())) {
      s_->m_primary = true;
    } else {
      IdealHandle sat = saturate(*this, s_->ring->maximal_ideal());
      s_->m_primary = sat.is_unit();
    }
  });
  return s_->m_primary;
}

const GroebnerBasis& IdealHandle::local_model() const {
  if (!is_m_primary()) raise(ErrorKind::NotMPrimary, to_string() + " is not m-primary");
  std::call_once(s_->model_once, [this] {
    const GroebnerBasis& G = gb();
    if (is_zero_dimensional(G)) {
      std::uint64_t L = standard_monomials(G).count();
      if (supported_at_origin(G, L)) {
        s_->model = G;
        return;
      }
    }
    // Add m^N until the colength stops growing; then m^N lies in the ideal locally.
    const LocalRing& R = *s_->ring;
    std::vector<Polynomial> base = with_relations(R, s_->gens);
    std::optional<GroebnerBasis> prev;
    std::uint64_t prev_len = 0;
    for (unsigned N = 1; N <= 200; ++N) {
      std::vector<Polynomial> gens = base;
      for (auto& m : monomials_of_degree(R.ambient(), N)) gens.push_back(std::move(m));
      GroebnerBasis M = groebner_cached(R.ambient(), gens);
      std::uint64_t len = standard_monomials(M).count();
      if (prev && len == prev_len) {
        s_->model = std::move(*prev);
        return;
      }
      prev = std::move(M);
      prev_len = len;
    }
    raise(ErrorKind::NotFiniteLength, "local model of " + to_string() + " did not stabilize");
  });
  return *s_->model;
}

std::string IdealHandle::to_string() const {
  if (s_->unit) return "(1)";
  std::string out = "(";
  for (std::size_t i = 0; i < s_->gens.size(); ++i) {
    if (i) out += ", ";
    out += s_->gens[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------- LocalRing

LocalRingPtr LocalRing::create(RingPtr ambient, std::vector<Polynomial> relations) {
  if (ambient->order().kind() != MonomialOrder::Kind::Grevlex) ambient = ambient->with_order(MonomialOrder::grevlex());
  if (ambient->index_of("_t")) raise(ErrorKind::ConfigError, "variable name _t is reserved");
  std::shared_ptr<LocalRing> R(new LocalRing());
  R->ambient_ = ambient;
  for (auto& f : relations) {
    Polynomial g = f.map_to(ambient);
    if (!g.constant_term().is_zero())
      raise(ErrorKind::PreconditionFailed, "relation " + g.to_string() + " is not in the maximal ideal");
    if (!g.is_zero()) R->relations_.push_back(std::move(g));
  }
  R->j_gb_ = groebner_cached(ambient, R->relations_);
  R->dim_ = lead_ideal_dimension(*R->j_gb_);
  std::vector<std::string> ev{"_t"};
  ev.insert(ev.end(), ambient->vars().begin(), ambient->vars().end());
  R->elim_ring_ = PolyRing::create(ev, ambient->field(), MonomialOrder::elimination(1));
  return R;
}

LocalRingPtr LocalRing::create(const std::vector<std::string>& vars, Field field,
                               const std::vector<std::string>& relations) {
  RingPtr amb = PolyRing::create(vars, field);
  std::vector<Polynomial> rel;
  for (const auto& s : relations) rel.push_back(parse_polynomial(s, amb));
  return create(amb, std::move(rel));
}

Polynomial LocalRing::parse(const std::string& text) const { return parse_polynomial(text, ambient_); }

IdealHandle LocalRing::make_ideal(std::vector<Polynomial> gens) const {
  auto st = std::make_shared<IdealHandle::State>();
  st->ring = shared_from_this();
  std::unordered_set<std::string> seen;
  bool all_monomial = true;
  for (auto& g : gens) {
    Polynomial h = normal_form(g.map_to(ambient_), *j_gb_);
    if (h.is_zero()) continue;
    if (!h.constant_term().is_zero()) {
      st->unit = true;
      st->gens = {Polynomial::from_int(ambient_, 1)};
      return IdealHandle(st);
    }
    h = h.monic();
    if (!seen.insert(h.to_string()).second) continue;
    all_monomial = all_monomial && h.is_monomial();
    st->gens.push_back(std::move(h));
  }
  if (all_monomial && st->gens.size() > 1) {
    std::vector<Monomial> ms;
    for (const auto& g : st->gens) ms.push_back(g.lead_monomial());
    st->gens.clear();
    for (const auto& m : minimalize(ambient_, std::move(ms)))
      st->gens.push_back(Polynomial::monomial(ambient_, m, Coefficient::one(ambient_->field())));
  }
  return IdealHandle(st);
}

IdealHandle LocalRing::ideal(const std::vector<Polynomial>& gens) const {
  for (const auto& g : gens)
    if (!g.map_to(ambient_).constant_term().is_zero())
      raise(ErrorKind::PreconditionFailed, "generator " + g.to_string() + " is not in the maximal ideal");
  return make_ideal(gens);
}

IdealHandle LocalRing::ideal(const std::vector<std::string>& gens) const {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse(s));
  return ideal(ps);
}

IdealHandle LocalRing::zero_ideal() const { return make_ideal({}); }

IdealHandle LocalRing::unit_ideal() const { return make_ideal({Polynomial::from_int(ambient_, 1)}); }

IdealHandle LocalRing::maximal_ideal() const {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ambient_->nvars(); ++i) vars.push_back(Polynomial::variable(ambient_, i));
  return make_ideal(vars);
}

const IdealHandle& LocalRing::saturation() const {
  std::call_once(sat_once_, [this] { sat_ = saturate(zero_ideal(), maximal_ideal()); });
  return *sat_;
}

long long LocalRing::w_length() const {
  std::call_once(w_once_, [this] { w_len_ = subquotient_length(saturation(), zero_ideal()); });
  return w_len_;
}

LocalRingPtr LocalRing::quotient_by_torsion() const {
  std::vector<Polynomial> rel = j_gb_->generators();
  const IdealHandle& sat = saturation();
  if (sat.is_unit()) raise(ErrorKind::PreconditionFailed, "A has finite length; A/W is zero");
  rel.insert(rel.end(), sat.generators().begin(), sat.generators().end());
  return create(ambient_, rel);
}

IdealHandle transport(const IdealHandle& a, const LocalRingPtr& target) {
  if (a.is_unit()) return target->unit_ideal();
  return target->make_ideal(a.generators());
}

// ---------------------------------------------------------------- operations

namespace {

void same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring() != b.ring()) raise(ErrorKind::ContextMismatch, "ideals belong to different local rings");
}

// (J+a) ∩ (J+b) in the ambient ring via one auxiliary variable.
std::vector<Polynomial> t_intersection(const LocalRing& R, const std::vector<Polynomial>& A,
                                       const std::vector<Polynomial>& B) {
  const RingPtr& E = R.elimination_ring();
  Polynomial t = Polynomial::variable(E, 0);
  Polynomial one_minus_t = Polynomial::from_int(E, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : A) gens.push_back(t * g.map_to(E));
  for (const auto& g : B) gens.push_back(one_minus_t * g.map_to(E));
  std::vector<Polynomial> out;
  for (const auto& g : eliminate(gens, 1)) out.push_back(g.map_to(R.ambient()));
  return out;
}

}  // namespace

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  same_ring(a, b);
  if (a.is_unit()) return a;
  if (b.is_unit()) return b;
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return a.ring()->make_ideal(std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return a.ring()->make_ideal(std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, int k) {
  if (k < 0) raise(ErrorKind::PreconditionFailed, "negative ideal power");
  if (k == 0) return a.ring()->unit_ideal();
  IdealHandle r = a;
  for (int i = 1; i < k; ++i) r = ideal_product(r, a);
  return r;
}

IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b) {
  same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const LocalRing& R = *a.ring();
  if (a.gb().all_monomial() && b.gb().all_monomial()) {
    std::vector<Polynomial> gens;
    Coefficient one = Coefficient::one(R.ambient()->field());
    for (const auto& f : a.gb().generators())
      for (const auto& g : b.gb().generators())
        gens.push_back(Polynomial::monomial(R.ambient(), f.lead_monomial().lcm(g.lead_monomial()), one));
    return R.make_ideal(std::move(gens));
  }
  return R.make_ideal(t_intersection(R, a.gb().generators(), b.gb().generators()));
}

IdealHandle ideal_colon(const IdealHandle& a, const Polynomial& f0) {
  const LocalRing& R = *a.ring();
  Polynomial f = normal_form(f0.map_to(R.ambient()), R.relations_gb());
  if (f.is_zero()) raise(ErrorKind::ColonByZero, "colon by an element that is zero in A");
  if (a.is_unit() || ideal_member(f, a.gb())) return R.unit_ideal();
  const GroebnerBasis& G = a.gb();
  if (G.all_monomial() && f.is_monomial()) {
    std::vector<Polynomial> gens;
    Coefficient one = Coefficient::one(R.ambient()->field());
    const Monomial& u = f.lead_monomial();
    for (const auto& g : G.generators()) gens.push_back(Polynomial::monomial(R.ambient(), g.lead_monomial().lcm(u) / u, one));
    return R.make_ideal(std::move(gens));
  }
  std::vector<Polynomial> gens;
  for (const auto& h : t_intersection(R, G.generators(), {f})) gens.push_back(divide_exact(h, f));
  return R.make_ideal(std::move(gens));
}

IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b) {
  same_ring(a, b);
  const LocalRing& R = *a.ring();
  if (b.is_unit()) return a;
  std::optional<IdealHandle> acc;
  for (const auto& g : b.generators()) {
    if (normal_form(g, R.relations_gb()).is_zero()) continue;
    IdealHandle c = ideal_colon(a, g);
    acc = acc ? ideal_intersect(*acc, c) : c;
  }
  if (!acc) raise(ErrorKind::ColonByZero, "colon by the zero ideal");
  return *acc;
}

bool equal_global(const IdealHandle& a, const IdealHandle& b) {
  same_ring(a, b);
  if (a.is_unit() || b.is_unit()) return a.is_unit() == b.is_unit();
  return a.gb() == b.gb();
}

IdealHandle saturate(const IdealHandle& a, const IdealHandle& b) {
  IdealHandle cur = a;
  for (int iter = 0; iter < 256; ++iter) {
    IdealHandle next = ideal_colon(cur, b);
    if (next.is_unit()) return next;
    if (equal_global(next, cur)) return cur;
    cur = next;
  }
  raise(ErrorKind::NotFiniteLength, "saturation did not stabilize");
}

bool contains_local(const IdealHandle& a, const Polynomial& f0) {
  const LocalRing& R = *a.ring();
  Polynomial f = f0.map_to(R.ambient());
  if (a.is_unit() || ideal_member(f, a.gb())) return true;
  if (normal_form(f, R.relations_gb()).is_zero()) return true;
  if (is_zero_dimensional(a.gb())) return ideal_member(f, a.local_model());
  return ideal_colon(a, f).is_unit();
}

bool contains_local(const IdealHandle& a, const IdealHandle& b) {
  same_ring(a, b);
  if (a.is_unit()) return true;
  if (b.is_unit()) return false;
  for (const auto& g : b.generators())
    if (!contains_local(a, g)) return false;
  return true;
}

bool equal_local(const IdealHandle& a, const IdealHandle& b) {
  if (equal_global(a, b)) return true;
  return contains_local(a, b) && contains_local(b, a);
}

std::optional<long long> length(const IdealHandle& a) {
  if (a.is_unit()) return 0;
  if (!a.is_m_primary()) return std::nullopt;
  return static_cast<long long>(standard_monomials(a.local_model()).count());
}

long long subquotient_length(const IdealHandle& x, const IdealHandle& y, int d_max) {
  same_ring(x, y);
  if (!contains_local(x, y)) raise(ErrorKind::NotNested, y.to_string() + " is not contained in " + x.to_string());
  if (y.is_unit()) return 0;
  const LocalRing& R = *x.ring();
  const GroebnerBasis& G = y.is_m_primary() ? y.local_model() : y.gb();

  std::unordered_map<Monomial, Polynomial, MonomialHash> pivots;
  auto insert = [&](Polynomial v) -> std::optional<Polynomial> {
    while (!v.is_zero()) {
      auto it = pivots.find(v.lead_monomial());
      if (it == pivots.end()) {
        Polynomial p = v.monic();
        pivots.emplace(p.lead_monomial(), p);
        return p;
      }
      v = v.sub_mul_term(v.lead_coeff(), Monomial(), it->second);
    }
    return std::nullopt;
  };

  std::vector<Polynomial> fresh;
  for (const auto& g : x.generators())
    if (auto p = insert(normal_form(g, G))) fresh.push_back(*p);
  for (int D = 1; !fresh.empty(); ++D) {
    if (D > d_max)
      raise(ErrorKind::NotFiniteLength, x.to_string() + " / " + y.to_string() + " needs degree above " +
                                            std::to_string(d_max));
    std::vector<Polynomial> next;
    for (const auto& v : fresh)
      for (std::size_t i = 0; i < R.ambient()->nvars(); ++i)
        if (auto p = insert(normal_form(Polynomial::variable(R.ambient(), i) * v, G))) next.push_back(*p);
    fresh = std::move(next);
  }
  return static_cast<long long>(pivots.size());
}

IdealHandle compute_W(const LocalRing& ring) { return ring.saturation(); }

bool is_cm_certificate(const LocalRingPtr& ring, const std::vector<Polynomial>& q) {
  if (static_cast<int>(q.size()) != ring->dimension())
    raise(ErrorKind::NotSOP, "need " + std::to_string(ring->dimension()) + " parameters, got " + std::to_string(q.size()));
  IdealHandle Q = ring->ideal(q);
  auto lq = length(Q);
  if (!lq) raise(ErrorKind::NotSOP, Q.to_string() + " is not m-primary");
  const int d = ring->dimension();
  NumericalFunction h{{0}, "A/Q^n"};
  IdealHandle power = ring->unit_ideal();
  for (int n = 1;; ++n) {
    power = ideal_product(power, Q);
    h.values.push_back(*length(power));
    if (n >= d + 4) {
      try {
        return fit_hilbert(h, d).e[0] == *lq;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoPolynomialTail || n >= 30) throw;
      }
    }
  }
}

}  // namespace filtra
