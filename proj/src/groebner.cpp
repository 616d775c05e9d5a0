#include "filtra/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "filtra/error.hpp"
#include "filtra/parser.hpp"

namespace filtra {

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, std::uint64_t fingerprint)
    : ring_(std::move(ring)), basis_(std::move(basis)), fingerprint_(fingerprint) {}

bool GroebnerBasis::all_monomial() const {
  return std::all_of(basis_.begin(), basis_.end(), [](const Polynomial& p) { return p.is_monomial(); });
}

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.lead_monomial());
  return out;
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  if (!ring_->same_context(*o.ring_) || basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] != o.basis_[i]) return false;
  return true;
}

namespace {

std::uint64_t fnv64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string canonical_key(const RingPtr& ring, std::span<const Polynomial> gens) {
  std::vector<std::string> parts;
  parts.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string key = ring->order().to_string() + "|" + ring->field().to_string() + "|";
  for (const auto& v : ring->vars()) key += v + ",";
  for (const auto& p : parts) key += "|" + p;
  return key;
}

// a[from..] - c*u*b[1..]; b's lead is assumed to cancel a[from-1].
std::vector<Term> reduce_step(const std::vector<Term>& a, std::size_t from, const std::vector<Term>& b,
                              const Coefficient& c, const Monomial& u, const PolyRing& R) {
  std::vector<Term> out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 1;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * u;
    auto cmp = R.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, -(b[j].coeff * c)});
      ++j;
    } else {
      Coefficient s = a[i].coeff - b[j].coeff * c;
      if (!s.is_zero()) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * u, -(b[j].coeff * c)});
  return out;
}

struct Reducer {
  std::vector<const Polynomial*> basis;
  std::vector<std::uint32_t> masks;

  void add(const Polynomial* g) {
    basis.push_back(g);
    masks.push_back(g->lead_monomial().support_mask());
  }

  int find(const Monomial& m) const {
    std::uint32_t mm = m.support_mask();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if ((masks[k] & ~mm) != 0) continue;
      if (basis[k]->lead_monomial().divides(m)) return static_cast<int>(k);
    }
    return -1;
  }

  Polynomial reduce(const Polynomial& f) const {
    const PolyRing& R = *f.ring();
    std::vector<Term> p = f.terms();
    std::vector<Term> rem;
    std::size_t start = 0;
    while (start < p.size()) {
      int k = find(p[start].mono);
      if (k < 0) {
        rem.push_back(p[start++]);
        continue;
      }
      const Polynomial& g = *basis[k];
      Coefficient c = p[start].coeff;
      if (!g.lead_coeff().is_one()) c = c / g.lead_coeff();
      Monomial u = p[start].mono / g.lead_monomial();
      p = reduce_step(p, start + 1, g.terms(), c, u, R);
      start = 0;
    }
    return Polynomial::from_sorted_terms(f.ring(), std::move(rem));
  }
};

struct Pair {
  std::uint32_t deg;
  Monomial lcm;
  std::size_t i, j;
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

std::vector<Polynomial> reduce_basis(const RingPtr& ring, std::vector<Polynomial> G) {
  const PolyRing& R = *ring;
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R.compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  std::vector<Polynomial> kept;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.lead_monomial().divides(g.lead_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Reducer red;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (k != i) red.add(&kept[k]);
    out.push_back(red.reduce(kept[i]).monic());
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R.compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  return out;
}

}  // namespace

std::uint64_t generator_fingerprint(const RingPtr& ring, std::span<const Polynomial> gens) {
  return fnv64(canonical_key(ring, gens));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  Polynomial a = f.mul_term(l / f.lead_monomial(), f.lead_coeff().inverse());
  Polynomial b = g.mul_term(l / g.lead_monomial(), g.lead_coeff().inverse());
  return a - b;
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, BuchbergerOptions opts) {
  std::uint64_t fp = generator_fingerprint(ring, gens);
  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    if (g.is_constant()) return GroebnerBasis(ring, {Polynomial::from_int(ring, 1)}, fp);
    input.push_back(g);
  }
  if (input.empty()) return GroebnerBasis(ring, {}, fp);

  const PolyRing& R = *ring;
  if (opts.monomial_shortcut &&
      std::all_of(input.begin(), input.end(), [](const Polynomial& p) { return p.is_monomial(); })) {
    std::vector<Monomial> ms;
    for (const auto& g : input) ms.push_back(g.lead_monomial());
    std::vector<Polynomial> basis;
    for (const auto& m : minimalize(ring, std::move(ms)))
      basis.push_back(Polynomial::monomial(ring, m, Coefficient::one(R.field())));
    return GroebnerBasis(ring, std::move(basis), fp);
  }

  // boxed so the reducer can hold stable pointers
  std::vector<std::unique_ptr<Polynomial>> G;
  Reducer red;
  auto cmp = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    auto c = R.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Pair, decltype(cmp)> queue(cmp);
  std::unordered_set<std::uint64_t> pending;
  bool unit = false;

  auto insert = [&](Polynomial h) {
    if (h.is_constant()) {
      unit = true;
      return;
    }
    G.push_back(std::make_unique<Polynomial>(h.monic()));
    std::size_t n = G.size() - 1;
    red.add(G.back().get());
    for (std::size_t k = 0; k < n; ++k) {
      Monomial l = G[k]->lead_monomial().lcm(G[n]->lead_monomial());
      queue.insert(Pair{l.degree(), l, k, n});
      pending.insert(pair_key(k, n));
    }
  };

  for (const auto& g : input) {
    Polynomial h = red.reduce(g);
    if (!h.is_zero()) insert(std::move(h));
    if (unit) break;
  }

  while (!unit && !queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(pair_key(p.i, p.j));
    const Polynomial& f = *G[p.i];
    const Polynomial& g = *G[p.j];
    if (opts.use_criteria) {
      if (f.lead_monomial().coprime(g.lead_monomial())) continue;
      bool chain = false;
      for (std::size_t k = 0; k < G.size() && !chain; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!G[k]->lead_monomial().divides(p.lcm)) continue;
        if (pending.count(pair_key(p.i, k)) || pending.count(pair_key(p.j, k))) continue;
        chain = true;
      }
      if (chain) continue;
    }
    Polynomial h = red.reduce(s_polynomial(f, g));
    if (!h.is_zero()) insert(std::move(h));
  }

  if (unit) return GroebnerBasis(ring, {Polynomial::from_int(ring, 1)}, fp);
  std::vector<Polynomial> basis;
  basis.reserve(G.size());
  for (auto& g : G) basis.push_back(std::move(*g));
  return GroebnerBasis(ring, reduce_basis(ring, std::move(basis)), fp);
}

namespace {

struct Cache {
  std::shared_mutex mu;
  std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> map;
};

Cache& cache() {
  static Cache c;
  return c;
}

constexpr int kCacheVersion = 1;

std::filesystem::path cache_file(const std::string& key) {
  const char* dir = std::getenv("FILTRA_CACHE_DIR");
  if (!dir || !*dir) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "gb-%016llx.json", static_cast<unsigned long long>(fnv64(key)));
  return std::filesystem::path(dir) / buf;
}

std::optional<GroebnerBasis> load_persisted(const RingPtr& ring, const std::string& key,
                                            std::uint64_t fp) {
  auto path = cache_file(key);
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  try {
    std::ifstream in(path);
    auto doc = nlohmann::json::parse(in);
    if (doc.at("version").get<int>() != kCacheVersion || doc.at("key").get<std::string>() != key)
      return std::nullopt;
    std::vector<Polynomial> basis;
    for (const auto& s : doc.at("basis")) basis.push_back(parse_polynomial(s.get<std::string>(), ring));
    return GroebnerBasis(ring, std::move(basis), fp);
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void store_persisted(const std::string& key, const GroebnerBasis& gb) {
  auto path = cache_file(key);
  if (path.empty()) return;
  try {
    std::filesystem::create_directories(path.parent_path());
    nlohmann::json doc;
    doc["version"] = kCacheVersion;
    doc["key"] = key;
    doc["order"] = gb.order().to_string();
    auto& arr = doc["basis"] = nlohmann::json::array();
    for (const auto& g : gb.generators()) arr.push_back(g.to_string());
    auto tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::string>{}(key) ^ reinterpret_cast<std::uintptr_t>(&gb));
    {
      std::ofstream out(tmp);
      out << doc.dump();
    }
    std::filesystem::rename(tmp, path);
  } catch (const std::exception&) {
  }
}

}  // namespace

GroebnerBasis groebner_cached(const RingPtr& ring, std::span<const Polynomial> gens) {
  std::string key = canonical_key(ring, gens);
  Cache& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.map.find(key);
    if (it != c.map.end()) return *it->second;
  }
  std::uint64_t fp = fnv64(key);
  auto loaded = load_persisted(ring, key, fp);
  auto gb = std::make_shared<const GroebnerBasis>(loaded ? std::move(*loaded) : buchberger(ring, gens));
  if (!loaded) store_persisted(key, *gb);
  std::unique_lock lock(c.mu);
  c.map.insert_or_assign(key, gb);
  return *gb;
}

void clear_groebner_cache() {
  std::unique_lock lock(cache().mu);
  cache().map.clear();
}

std::size_t groebner_cache_size() {
  std::shared_lock lock(cache().mu);
  return cache().map.size();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  Reducer red;
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring());
    red.add(&g);
  }
  return red.reduce(f);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring());
  if (gb.is_unit()) return Polynomial(f.ring());
  return normal_form(f, std::span<const Polynomial>(gb.generators()));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) raise(ErrorKind::PreconditionFailed, "division by zero polynomial");
  std::vector<Term> q;
  Polynomial r = f;
  Coefficient inv = g.lead_coeff().inverse();
  while (!r.is_zero()) {
    if (!g.lead_monomial().divides(r.lead_monomial()))
      raise(ErrorKind::PreconditionFailed, g.to_string() + " does not divide " + f.to_string());
    Term t{r.lead_monomial() / g.lead_monomial(), r.lead_coeff() * inv};
    r = r.sub_mul_term(t.coeff, t.mono, g);
    q.push_back(std::move(t));
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(q));
}

std::vector<Monomial> minimalize(const RingPtr& ring, std::vector<Monomial> gens) {
  const PolyRing& R = *ring;
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return R.compare(a, b) < 0;
  });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) { return R.compare(a, b) < 0; });
  return kept;
}

StandardMonomialSet::StandardMonomialSet(RingPtr ring, std::vector<Monomial> lead_generators)
    : ring_(std::move(ring)), gens_(minimalize(ring_, std::move(lead_generators))) {}

bool StandardMonomialSet::is_standard(const Monomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return false;
  return true;
}

bool StandardMonomialSet::zero_dimensional() const {
  std::uint32_t covered = 0;
  for (const auto& g : gens_) {
    std::uint32_t mask = g.support_mask();
    if (std::has_single_bit(mask)) covered |= mask;
    if (mask == 0) return true;  // unit ideal
  }
  std::uint32_t all = ring_->nvars() >= 32 ? ~0u : ((1u << ring_->nvars()) - 1);
  return (covered & all) == all;
}

std::vector<Monomial> StandardMonomialSet::enumerate() const {
  if (!zero_dimensional())
    raise(ErrorKind::InfiniteSetEnumerationRequested, "lead ideal is not zero-dimensional");
  std::vector<Monomial> out;
  std::vector<Monomial> layer;
  if (is_standard(Monomial())) layer.push_back(Monomial());
  const std::size_t n = ring_->nvars();
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [&](const Monomial& a, const Monomial& b) {
      return MonomialOrder::lex().compare(a, b, n) > 0;
    });
    out.insert(out.end(), layer.begin(), layer.end());
    std::unordered_set<Monomial, MonomialHash> next;
    for (const auto& m : layer)
      for (std::size_t i = 0; i < n; ++i) {
        Monomial c = m * Monomial::variable(i);
        if (is_standard(c)) next.insert(c);
      }
    layer.assign(next.begin(), next.end());
  }
  return out;
}

std::uint64_t StandardMonomialSet::count() const { return enumerate().size(); }

StandardMonomialSet standard_monomials(const GroebnerBasis& gb) {
  return StandardMonomialSet(gb.ring(), gb.lead_monomials());
}

std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::size_t k) {
  if (gens.empty()) return {};
  const RingPtr& R = gens[0].ring();
  if (k == 0) return groebner_cached(R, gens).generators();
  RingPtr E = R->with_order(MonomialOrder::elimination(k));
  std::vector<Polynomial> mapped;
  mapped.reserve(gens.size());
  for (const auto& g : gens) mapped.push_back(g.map_to(E));
  GroebnerBasis gb = groebner_cached(E, mapped);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < k && free; ++i) free = t.mono[i] == 0;
      if (!free) break;
    }
    if (free) out.push_back(g.map_to(R));
  }
  return out;
}

int lead_ideal_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const std::size_t n = gb.ring()->nvars();
  std::vector<std::uint32_t> masks;
  for (const auto& m : minimalize(gb.ring(), gb.lead_monomials())) masks.push_back(m.support_mask());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto m : masks)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace filtra
