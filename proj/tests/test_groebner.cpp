#include <algorithm>
#include <random>

#include "doctest.h"
#include "filtra/error.hpp"
#include "filtra/groebner.hpp"
#include "filtra/parser.hpp"
#include "oracles.hpp"

using namespace filtra;

namespace {

std::vector<Polynomial> polys(const RingPtr& R, std::initializer_list<const char*> ss) {
  std::vector<Polynomial> out;
  for (auto s : ss) out.push_back(parse_polynomial(s, R));
  return out;
}

std::vector<std::string> strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators()) out.push_back(g.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-4, 4);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<long long> ex(R->nvars());
    int budget = maxdeg;
    for (auto& v : ex) {
      v = std::min(e(rng), budget);
      budget -= static_cast<int>(v);
    }
    ts.push_back({Monomial::from_exponents(ex), Coefficient::from_int(R->field(), c(rng))});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

// evaluates f at (t, t^2, t^3) as a univariate coefficient map
bool vanishes_on_twisted_cubic(const Polynomial& f) {
  std::map<long long, Coefficient> acc;
  for (const auto& t : f.terms()) {
    long long w = t.mono[0] + 2LL * t.mono[1] + 3LL * t.mono[2];
    auto it = acc.find(w);
    if (it == acc.end())
      acc.emplace(w, t.coeff);
    else
      it->second += t.coeff;
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto R = PolyRing::create({"x", "y"}, Field::rationals());
  CHECK(strings(buchberger(R, polys(R, {"x", "y"}))) == std::vector<std::string>{"x", "y"});
  CHECK(strings(buchberger(R, polys(R, {"y^2-x^3", "x"}))) == std::vector<std::string>{"x", "y^2"});
  CHECK(buchberger(R, {}).is_zero_ideal());
  CHECK(buchberger(R, polys(R, {"x", "1+x"})).is_unit());

  auto L = PolyRing::create({"x", "y", "z"}, Field::rationals(), MonomialOrder::lex());
  auto gb = buchberger(L, polys(L, {"y-x^2", "z-x^3"}));
  auto s = strings(gb);
  CHECK(std::find(s.begin(), s.end(), "y^3 - z^2") != s.end());
  for (const auto& g : gb.generators()) CHECK(vanishes_on_twisted_cubic(g));
}

TEST_CASE("normal form examples") {
  auto R = PolyRing::create({"x", "y"}, Field::rationals());
  auto gb = buchberger(R, polys(R, {"y^2-x^3"}));
  REQUIRE(gb.generators().size() == 1);
  CHECK(gb.generators()[0].to_string() == "x^3 - y^2");
  CHECK(normal_form(parse_polynomial("x^3", R), gb).to_string() == "y^2");
  CHECK(normal_form(Polynomial(R), gb).is_zero());
  auto unit = buchberger(R, polys(R, {"1"}));
  CHECK(normal_form(parse_polynomial("x^5+3*y", R), unit).is_zero());
}

TEST_CASE("standard monomials examples") {
  auto R = PolyRing::create({"x", "y"}, Field::rationals());
  auto sm = standard_monomials(buchberger(R, polys(R, {"x^2", "y^3"})));
  std::vector<std::string> names;
  for (const auto& m : sm.enumerate()) names.push_back(R->monomial_to_string(m));
  CHECK(names == std::vector<std::string>{"1", "x", "y", "x*y", "y^2", "x*y^2"});
  CHECK(standard_monomials(buchberger(R, polys(R, {"x", "y"}))).count() == 1);
  CHECK(standard_monomials(buchberger(R, polys(R, {"y^2-x^3", "x"}))).count() == 2);
  auto inf = standard_monomials(buchberger(R, polys(R, {"x^2"})));
  CHECK_FALSE(inf.zero_dimensional());
  CHECK(inf.is_standard(Monomial::from_exponents({1, 9})));
  try {
    inf.enumerate();
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfiniteSetEnumerationRequested);
  }
}

TEST_CASE("eliminate examples") {
  auto T = PolyRing::create({"t", "x", "y"}, Field::rationals());
  auto out = eliminate(polys(T, {"t*x", "(1-t)*y"}), 1);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to_string() == "x*y");
  auto R = PolyRing::create({"x", "y"}, Field::rationals());
  auto g0 = eliminate(polys(R, {"x^2", "x*y"}), 0);
  CHECK(g0 == buchberger(R, polys(R, {"x^2", "x*y"})).generators());
  CHECK(eliminate(polys(T, {"t-x^2"}), 1).empty());
}

TEST_CASE("lead ideal dimension examples") {
  auto R = PolyRing::create({"x", "y"}, Field::rationals());
  CHECK(lead_ideal_dimension(buchberger(R, {})) == 2);
  CHECK(lead_ideal_dimension(buchberger(R, polys(R, {"x^2", "y^3"}))) == 0);
  CHECK(lead_ideal_dimension(buchberger(R, polys(R, {"1"}))) == -1);
  auto S = PolyRing::create({"x", "y", "z", "w"}, Field::rationals());
  CHECK(lead_ideal_dimension(buchberger(S, polys(S, {"x*z", "x*w", "y*z", "y*w"}))) == 2);
}

TEST_CASE("exact division") {
  auto R = PolyRing::create({"x", "y"}, Field::rationals());
  auto f = parse_polynomial("(x+y)*(x^2-3*y)", R);
  CHECK(divide_exact(f, parse_polynomial("x+y", R)) == parse_polynomial("x^2-3*y", R));
  CHECK_THROWS_AS(divide_exact(f, parse_polynomial("x-y", R)), Error);
}

TEST_CASE("groebner properties on random ideals") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (auto field : {Field::prime(32003), Field::rationals(), Field::prime(7)}) {
    auto R = PolyRing::create({"x", "y", "z"}, field);
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<int> ng(1, 3);
      std::vector<Polynomial> gens;
      int n = ng(rng);
      for (int i = 0; i < n; ++i) gens.push_back(random_poly(R, rng, 3, 3));
      auto gb = buchberger(R, gens);
      const auto& G = gb.generators();

      for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) CHECK(normal_form(s_polynomial(G[i], G[j]), gb).is_zero());
      for (std::size_t i = 0; i < G.size(); ++i) {
        CHECK(G[i].lead_coeff().is_one());
        for (std::size_t j = 0; j < G.size(); ++j)
          if (i != j) {
            for (const auto& t : G[i].terms()) CHECK_FALSE(G[j].lead_monomial().divides(t.mono));
          }
      }
      for (const auto& g : gens) CHECK(ideal_member(g, gb));

      Polynomial h(R);
      for (const auto& g : gens) h = h + random_poly(R, rng, 2, 2) * g;
      CHECK(normal_form(h, gb).is_zero());

      Polynomial f = random_poly(R, rng, 5, 4);
      Polynomial nf = normal_form(f, gb);
      CHECK(normal_form(nf, gb) == nf);
      CHECK(normal_form(f - nf, gb).is_zero());

      auto perm = gens;
      std::reverse(perm.begin(), perm.end());
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(buchberger(R, perm) == gb);

      CHECK(buchberger(R, gens, BuchbergerOptions{false, false}) == gb);
      ++compared;
    }
  }
  CHECK(compared >= 50);
}

TEST_CASE("standard monomial count equals staircase oracle") {
  std::mt19937_64 rng(99);
  int instances = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t nv = 1 + trial % 3;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(nv);
    auto R = PolyRing::create(names, Field::prime(32003));
    std::uniform_int_distribution<int> e(0, 4), extra(0, 4);
    std::vector<oracle::Exps> gens;
    for (std::size_t i = 0; i < nv; ++i) {
      oracle::Exps g(nv, 0);
      g[i] = 1 + e(rng);
      gens.push_back(g);
    }
    int k = extra(rng);
    for (int i = 0; i < k; ++i) {
      oracle::Exps g(nv);
      for (auto& v : g) v = e(rng);
      gens.push_back(g);
    }
    std::vector<Polynomial> ps;
    for (const auto& g : gens) {
      std::vector<long long> ex(g.begin(), g.end());
      ps.push_back(Polynomial::monomial(R, Monomial::from_exponents(ex), Coefficient::one(R->field())));
    }
    auto gb = buchberger(R, ps);
    CHECK(static_cast<long long>(standard_monomials(gb).count()) == oracle::staircase_count(gens, nv));
    CHECK(buchberger(R, ps, BuchbergerOptions{false, false}) == gb);
    ++instances;
  }
  CHECK(instances >= 100);
}

TEST_CASE("cache") {
  auto R = PolyRing::create({"x", "y"}, Field::prime(32003));
  auto gens = polys(R, {"y^2-x^3", "x*y"});
  auto a = groebner_cached(R, gens);
  std::reverse(gens.begin(), gens.end());
  auto b = groebner_cached(R, gens);
  CHECK(a == b);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a == buchberger(R, gens));
}
