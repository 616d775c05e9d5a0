#include "doctest.h"
#include "filtra/error.hpp"
#include "filtra/filtration.hpp"

using namespace filtra;

namespace {

using S = std::vector<std::string>;

LocalRingPtr ring(S vars, S rel, Field f = Field::prime(32003)) { return LocalRing::create(vars, f, rel); }

std::vector<Polynomial> polys(const LocalRingPtr& R, const S& xs) {
  std::vector<Polynomial> out;
  for (const auto& s : xs) out.push_back(R->parse(s));
  return out;
}

ReductionSystem red(const LocalRingPtr& R, const S& gens) { return ReductionSystem::from_generators(R, polys(R, gens)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ConfigError;
}

}  // namespace

TEST_CASE("get_ideal examples") {
  auto A = ring({"x", "y"}, {});
  auto F = Filtration::adic(A->maximal_ideal(), 6);
  CHECK(equal_global(F.get(2), A->ideal(S{"x^2", "x*y", "y^2"})));
  CHECK(F.get(0).is_unit());
  CHECK(kind_of([&] { F.get(7); }) == ErrorKind::HorizonExceeded);
  CHECK(kind_of([&] { F.get(-1); }) == ErrorKind::HorizonExceeded);
  CHECK_NOTHROW(F.with_horizon(9).get(9));

  auto I = A->ideal(S{"x^4", "x^3*y", "x*y^3", "y^4"});
  auto RR = Filtration::ratliff_rush(I, 4);
  CHECK(equal_local(RR.get(1), A->ideal(S{"x^4", "x^3*y", "x*y^3", "y^4", "x^2*y^2"})));
  CHECK_FALSE(contains_local(I, RR.get(1)));

  std::vector<IdealHandle> list;
  for (int n = 1; n <= 3; ++n) list.push_back(ideal_power(A->maximal_ideal(), n));
  auto E = Filtration::explicit_list(list, 8);
  for (int n = 0; n <= 8; ++n) CHECK(equal_global(E.get(n), F.with_horizon(8).get(n)));
}

TEST_CASE("Ratliff-Rush cap") {
  auto A = ring({"x", "y"}, {});
  auto I = A->ideal(S{"x^4", "x^3*y", "x*y^3", "y^4"});
  CHECK(kind_of([&] { Filtration::ratliff_rush(I, 3, 1).get(1); }) == ErrorKind::RatliffRushNotStabilized);
}

TEST_CASE("filtration properties") {
  struct Case {
    S vars, rel, I;
  };
  std::vector<Case> cases = {
      {{"x", "y"}, {"y^2-x^3"}, {"x", "y"}},
      {{"x", "y"}, {}, {"x^4", "x^3*y", "x*y^3", "y^4"}},
      {{"x", "y"}, {"x^2", "x*y"}, {"x", "y"}},
      {{"x", "y", "z"}, {"x*z-y^2", "x^3-y*z", "x^2*y-z^2"}, {"x", "y", "z"}},
  };
  for (const auto& c : cases) {
    auto A = ring(c.vars, c.rel);
    auto I = A->ideal(c.I);
    const int H = 5;
    for (auto F : {Filtration::adic(I, H), Filtration::ratliff_rush(I, H)}) {
      for (int a = 1; a <= H; ++a) {
        CHECK(contains_local(F.get(a - 1), F.get(a)));
        CHECK(contains_local(F.get(a), ideal_power(I, a)));
        for (int b = a; a + b <= H; ++b) CHECK(contains_local(F.get(a + b), ideal_product(F.get(a), F.get(b))));
      }
    }
  }
}

TEST_CASE("verify_admissible") {
  auto cusp = ring({"x", "y"}, {"y^2-x^3"});
  auto F = Filtration::adic(cusp->maximal_ideal(), 12);
  auto q = red(cusp, {"x"});
  auto ev = verify_admissible(F, q);
  CHECK(ev.n0 == 1);
  CHECK(q.reduction_number == 1);
  CHECK(ev.warnings.empty());

  auto reg = ring({"x", "y"}, {});
  auto q2 = red(reg, {"x", "y"});
  CHECK(verify_admissible(Filtration::adic(reg->maximal_ideal(), 8), q2).n0 == 0);

  auto m = reg->maximal_ideal();
  auto bad = Filtration::explicit_list({ideal_power(m, 2), m}, 6);
  try {
    verify_admissible(bad, q2);
    FAIL("expected NotAdmissible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
    CHECK(std::string(e.what()).find("n=1") != std::string::npos);
  }

  // y alone is not a reduction of m over the cusp
  auto qy = red(cusp, {"y"});
  CHECK(kind_of([&] { verify_admissible(F, qy); }) == ErrorKind::NotAdmissible);
  // wrong number of generators
  auto qxy = red(cusp, {"x", "y"});
  CHECK(kind_of([&] { verify_admissible(F, qxy); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("strict mode for reductions of I") {
  // Q reduces the Ratliff-Rush filtration but is not contained in I itself.
  auto A = ring({"x", "y"}, {});
  auto I = A->ideal(S{"x^4", "x^3*y", "x*y^3", "y^4"});
  auto F = Filtration::ratliff_rush(I, 6);
  auto q = red(A, {"x^4", "y^4"});
  auto ev = verify_admissible(F, q);
  CHECK(ev.warnings.empty());
  CHECK(ev.n0 <= 2);

  auto q2 = red(A, {"x^4+x^2*y^2", "y^4"});
  auto ev2 = verify_admissible(F, q2);
  CHECK(ev2.warnings.size() == 1);
  CHECK(kind_of([&] { verify_admissible(F, q2, true); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("find_reduction") {
  auto cusp = ring({"x", "y"}, {"y^2-x^3"});
  auto F = Filtration::adic(cusp->maximal_ideal(), 12);
  auto q = find_reduction(F, 10, 7);
  REQUIRE(q.gens.size() == 1);
  CHECK(q.reduction_number == 1);
  CHECK(*length(q.Q) == 2);
  CHECK(q.seed == std::uint64_t{7});
  auto again = find_reduction(F, 10, 7);
  CHECK(again.gens[0] == q.gens[0]);
  CHECK(again.attempt == q.attempt);
  CHECK(verify_admissible(F, q).n0 == 1);

  auto reg = ring({"x", "y"}, {});
  auto qr = find_reduction(Filtration::adic(reg->maximal_ideal(), 8), 10, 1);
  CHECK(qr.reduction_number == 0);

  // Over F_2 the only candidate is x+y, a zero divisor on three lines.
  auto f2 = ring({"x", "y"}, {"x^2*y+x*y^2"}, Field::prime(2));
  CHECK(kind_of([&] { find_reduction(Filtration::adic(f2->maximal_ideal(), 8), 20, 3); }) ==
        ErrorKind::SearchExhausted);

  auto pt = ring({"x"}, {"x^2"});
  CHECK(kind_of([&] { find_reduction(Filtration::adic(pt->maximal_ideal(), 6), 3, 1); }) ==
        ErrorKind::PreconditionFailed);
}

TEST_CASE("C0 examples") {
  auto reg = ring({"x", "y"}, {});
  CHECK(check_C0_dsequence(reg, polys(reg, {"x", "y"})).holds);
  auto dn = ring({"x", "y"}, {"x^2"});
  auto r = check_C0_dsequence(dn, polys(dn, {"x"}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness.find("i=1, j=1") != std::string::npos);
  auto dz = ring({"x", "y"}, {"x^2", "x*y"});
  CHECK(check_C0_dsequence(dz, polys(dz, {"y"})).holds);
  // regular sequences in a CM ring
  auto t345 = ring({"x", "y", "z"}, {"x*z-y^2", "x^3-y*z", "x^2*y-z^2"});
  CHECK(check_C0_dsequence(t345, polys(t345, {"x"})).holds);
  auto reg3 = ring({"x", "y", "z"}, {});
  CHECK(check_C0_dsequence(reg3, polys(reg3, {"x", "y+x^2", "z"})).holds);
}

TEST_CASE("C1 examples") {
  auto reg = ring({"x", "y"}, {});
  CHECK(check_C1_usd_bounded(reg, polys(reg, {"x", "y"}), 2).holds);
  auto tp = ring({"x", "y", "z", "w"}, {"x*z", "x*w", "y*z", "y*w"});
  CHECK(check_C1_usd_bounded(tp, polys(tp, {"x-z", "y-w"}), 2).holds);
  auto dn = ring({"x", "y"}, {"x^2"});
  CHECK_FALSE(check_C1_usd_bounded(dn, polys(dn, {"x"}), 1).holds);
  CHECK(kind_of([&] { check_C1_usd_bounded(reg, polys(reg, {"x"}), 0); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("C2 and C3 examples") {
  auto cusp = ring({"x", "y"}, {"y^2-x^3"});
  CHECK(check_C2(red(cusp, {"x"}), Filtration::adic(cusp->maximal_ideal(), 6)).holds);
  CHECK(check_C3(*cusp).holds);
  auto dz = ring({"x", "y"}, {"x^2", "x*y"});
  CHECK(check_C2(red(dz, {"y"}), Filtration::adic(dz->maximal_ideal(), 6)).holds);
  CHECK_FALSE(check_C3(*dz).holds);
  auto reg = ring({"x", "y"}, {});
  CHECK(check_C2(red(reg, {"x", "y"}), Filtration::adic(reg->maximal_ideal(), 6)).holds);
  // (0) : y = (x) is not inside I_1 = Q = (y)
  auto r = check_C2(red(dz, {"y"}), Filtration::adic(dz->ideal(S{"y"}), 6));
  CHECK_FALSE(r.holds);
  CHECK(r.witness.find("i=1") != std::string::npos);
}

TEST_CASE("superficial elements") {
  auto cusp = ring({"x", "y"}, {"y^2-x^3"});
  auto F = Filtration::adic(cusp->maximal_ideal(), 10);
  auto q = red(cusp, {"x"});
  auto r = check_superficial(F, q, cusp->parse("x"));
  CHECK(r.holds);
  CHECK(r.c == 1);
  CHECK(kind_of([&] { check_superficial(F, q, cusp->parse("0")); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([&] { check_superficial(F, q, cusp->parse("x^2")); }) == ErrorKind::PreconditionFailed);

  auto reg = ring({"x", "y"}, {});
  auto qr = red(reg, {"x", "y"});
  CHECK(check_superficial(Filtration::adic(reg->maximal_ideal(), 8), qr, reg->parse("x")).holds);
}
