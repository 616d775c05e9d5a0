#include "filtra/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "filtra/error.hpp"

namespace filtra {

RingPtr PolyRing::create(std::vector<std::string> vars, Field field, MonomialOrder order) {
  if (vars.size() > kMaxVars)
    raise(ErrorKind::ExponentOverflow, "at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) raise(ErrorKind::ConfigError, "duplicate variable " + vars[i]);
  if (order.kind() == MonomialOrder::Kind::Elimination && order.block() > vars.size())
    raise(ErrorKind::ConfigError, "elimination block larger than variable count");
  return RingPtr(new PolyRing(std::move(vars), field, order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool PolyRing::same_context(const PolyRing& o) const {
  return this == &o || (vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_);
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return create(vars_, field_, order); }

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_context(*b))
    raise(ErrorKind::ContextMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const PolyRing& R = *p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::from_int(RingPtr ring, long long n) {
  Coefficient c = Coefficient::from_int(ring->field(), n);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) raise(ErrorKind::UnknownVariable, "variable index " + std::to_string(i));
  Coefficient one = Coefficient::one(ring->field());
  return monomial(std::move(ring), Monomial::variable(i), one);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Coefficient& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Coefficient Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Coefficient::zero(ring_->field());
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

namespace {

// a + s*b, where b's terms are multiplied by m and scaled by s.
std::vector<Term> merge(const std::vector<Term>& a, std::size_t a_from, const std::vector<Term>& b,
                        const Coefficient* s, const Monomial* m, const PolyRing& R) {
  std::vector<Term> out;
  out.reserve(a.size() - a_from + b.size());
  std::size_t i = a_from, j = 0;
  auto bterm = [&](std::size_t k) {
    Term t = b[k];
    if (m) t.mono = t.mono * *m;
    if (s) t.coeff = t.coeff * *s;
    return t;
  };
  while (i < a.size() && j < b.size()) {
    Monomial bm = m ? b[j].mono * *m : b[j].mono;
    auto c = R.compare(a[i].mono, bm);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(bterm(j++));
    } else {
      Coefficient sum = a[i].coeff + (s ? b[j].coeff * *s : b[j].coeff);
      if (!sum.is_zero()) out.push_back({a[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(bterm(j++));
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial p(ring_);
  p.terms_ = merge(terms_, 0, o.terms_, nullptr, nullptr, *ring_);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Coefficient m1 = -Coefficient::one(ring_->field());
  Polynomial p(ring_);
  p.terms_ = merge(terms_, 0, o.terms_, &m1, nullptr, *ring_);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, a.coeff * b.coeff);
      else
        it->second += a.coeff * b.coeff;
    }
  }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) ts.push_back({m, c});
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::scale(const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coeff().is_one()) return *this;
  return scale(lead_coeff().inverse());
}

Polynomial Polynomial::sub_mul_term(const Coefficient& c, const Monomial& m,
                                    const Polynomial& g) const {
  Coefficient s = -c;
  Polynomial p(ring_);
  p.terms_ = merge(terms_, 0, g.terms_, &s, &m, *ring_);
  return p;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  if (target == ring_) return *this;
  if (!(target->field() == ring_->field()))
    raise(ErrorKind::ContextMismatch, "cannot move polynomial between fields");
  std::vector<std::size_t> idx(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    auto j = target->index_of(ring_->vars()[i]);
    if (!j) {
      bool used = false;
      for (const auto& t : terms_) used = used || t.mono[i] != 0;
      if (used) raise(ErrorKind::UnknownVariable, ring_->vars()[i] + " missing from target ring");
      idx[i] = kMaxVars;
    } else {
      idx[i] = *j;
    }
  }
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<long long> e(target->nvars(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) e[idx[i]] = t.mono[i];
    ts.push_back({Monomial::from_exponents(e), t.coeff});
  }
  return from_terms(target, std::move(ts));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_context(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coeff.is_negative_repr();
    std::string c = neg ? (-t.coeff).to_string() : t.coeff.to_string();
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += ring_->monomial_to_string(t.mono);
    }
  }
  return out;
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    for (char ch : t.coeff.key()) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  }
  return h;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial sub(const Polynomial& f, const Polynomial& g) { return f - g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial scale(const Polynomial& f, const Coefficient& c) { return f.scale(c); }

}  // namespace filtra
