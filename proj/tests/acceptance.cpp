// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "filtra/cli.hpp"
#include "filtra/error.hpp"
#include "filtra/filtration.hpp"
#include "filtra/groebner.hpp"
#include "filtra/local_ring.hpp"
#include "oracles.hpp"

using namespace filtra;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(FILTRA_SOURCE_DIR) / "corpus";

struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

VerifyFlags stable(std::optional<int> horizon = std::nullopt) {
  VerifyFlags f;
  f.stable_output = true;
  f.horizon = horizon;
  return f;
}

json run(const std::string& job, std::optional<int> horizon = std::nullopt) {
  return run_job(load_config(kCorpus / (job + ".json")), stable(horizon)).report;
}

const json* find_check(const json& r, const std::string& name) {
  for (const auto& c : r["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

bool check_is(const json& r, const std::string& name, const std::string& status) {
  const json* c = find_check(r, name);
  return c && (*c)["status"] == status;
}

std::vector<long long> ev(const json& r, const char* which) {
  return r["coefficients"][which]["e"].get<std::vector<long long>>();
}

void crit1(Criterion& c) {
  json r = run("cusp");
  c.expect(r["exit_code"] == 0, "exit code");
  c.expect(r["filtration"]["horizon"] == 12, "horizon");
  c.expect(ev(r, "I") == std::vector<long long>{2, 1}, "e(I)");
  c.expect(ev(r, "Q") == std::vector<long long>{2, 0}, "e(Q)");
  c.expect(r["coefficients"]["S"]["vanishes"] == true, "Sally vanishes");
  c.expect(r["lengths"]["S_n"].size() == 12, "S_n up to 11");
  const auto& in = r["inequality"];
  c.expect(in["lhs"] == 1 && in["rhs"] == 1 && in["gap"] == 0, "inequality 1 = 1");
  c.expect(r["equality_holds"] == true, "equality");
  c.expect(r["condition2"]["holds"] == true, "condition 2");
  c.expect(check_is(r, "prop24", "pass"), "prop24");
  c.expect(check_is(r, "fiber_cone", "pass"), "fiber cone");
  c.expect(check_is(r, "remark_I2_in_Q", "pass"), "I2 in Q branch");
}

void crit2(Criterion& c) {
  json r = run("two_planes");
  c.expect(r["ring"]["d"] == 2 && r["ring"]["w_length"] == 0, "d=2, W=0");
  c.expect(ev(r, "I") == std::vector<long long>{2, 0, -1}, "e(I)");
  c.expect(ev(r, "Q")[0] == 2 && ev(r, "Q")[1] == -1, "e(Q)");
  c.expect(r["lengths"]["A/Q"] == 3, "l(A/Q)");
  auto ring = LocalRing::create({"x", "y", "z", "w"}, Field::prime(kDefaultPrime),
                                {"x*z", "x*w", "y*z", "y*w"});
  c.expect(!is_cm_certificate(ring, {ring->parse("x - z"), ring->parse("y - w")}), "not CM");
  c.expect(r["inequality"]["gap"] == 1, "gap");
  c.expect(r["equality_holds"] == false && r["condition2"]["holds"] == false, "equality/condition 2");
  c.expect(r["equivalence"] == "pass", "equivalence");
  const json* t = find_check(r, "trung");
  c.expect(t && (*t)["status"] == "pass" && (*t)["detail"] == "2 = 3 - 1", "Trung 2 = 3 - 1");
}

void crit3(Criterion& c) {
  json r = run("depth_zero");
  c.expect(r["ring"]["w_length"] == 1, "l(W)");
  c.expect(ev(r, "I") == std::vector<long long>{1, -1}, "e(I)");
  c.expect(ev(r, "Q") == std::vector<long long>{1, -1}, "e(Q)");
  c.expect(r["inequality"]["gap"] == 1, "gap");
  const auto& cl3 = r["condition2"]["clause3"];
  c.expect(cl3["holds"] == false && cl3["witness"] == "i=1: (x) ⊄ (y)", "clause 3 witness");
  const json* rc = find_check(r, "reduction_to_C");
  c.expect(rc && (*rc)["status"] == "pass" &&
               (*rc)["detail"] == "equality in A: 0, in C: 1, W ⊆ I_2+Q: 0",
           "reduction to C");
  c.expect(r["inequality"]["rhs"] == -1 && r["inequality"]["second_part"] == false, "second inequality");
  bool noted = false;
  for (const auto& w : r["warnings"]) noted = noted || w == "second inequality: rhs = -1 < 0";
  c.expect(noted, "second inequality recorded");
}

void crit4(Criterion& c) {
  json r = run("sally_adic");
  c.expect(r["lengths"]["S_n"][1] == 2, "l(S_1) = 2");
  auto ring = LocalRing::create({"x", "y"}, Field::prime(kDefaultPrime), {});
  IdealHandle I = ring->ideal(std::vector<std::string>{"x^4", "x^3*y", "x*y^3", "y^4"});
  auto rr = Filtration::ratliff_rush(I, 8);
  IdealHandle I1 = rr.get(1);
  c.expect(contains_local(I1, I) && !contains_local(I, I1), "strict containment");
  c.expect(contains_local(I1, ring->parse("x^2*y^2")), "x^2 y^2 adjoined");
  c.expect(equal_local(I1, ideal_sum(I, ring->ideal(std::vector<std::string>{"x^2*y^2"}))), "exactly x^2 y^2");
}

void crit5(Criterion& c) {
  std::mt19937_64 rng(20261015);
  const int instances = 150;
  int mismatches = 0;
  for (int it = 0; it < instances; ++it) {
    std::size_t n = 1 + it % 3;
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(n);
    Field F = it % 2 ? Field::rationals() : Field::prime(kDefaultPrime);
    RingPtr R = PolyRing::create(names, F);
    std::uniform_int_distribution<int> e(0, 4), extra(0, 4);
    std::vector<Polynomial> gens;
    std::vector<oracle::Exps> exps;
    auto add = [&](std::vector<long long> ex) {
      gens.push_back(Polynomial::monomial(R, Monomial::from_exponents(ex), Coefficient::one(F)));
      exps.emplace_back(ex.begin(), ex.end());
    };
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long long> ex(n, 0);
      ex[i] = 1 + e(rng);
      add(ex);
    }
    for (int k = extra(rng); k > 0; --k) {
      std::vector<long long> ex(n);
      for (auto& v : ex) v = e(rng);
      add(ex);
    }
    BuchbergerOptions with{true, false}, without{false, false};
    GroebnerBasis a = buchberger(R, gens, with);
    GroebnerBasis b = buchberger(R, gens, without);
    if (!(a == b)) ++mismatches;
    long long gb_len = static_cast<long long>(standard_monomials(a).count());
    if (gb_len != oracle::staircase_count(exps, n)) ++mismatches;
    // the same comparison on a binomial perturbation of the ideal
    std::vector<Polynomial> pert = gens;
    pert.back() = pert.back() + Polynomial::monomial(R, Monomial::variable(it % n, 5), Coefficient::from_int(F, 3));
    if (!(buchberger(R, pert, with) == buchberger(R, pert, without))) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches over " + std::to_string(instances));
}

void crit6(Criterion& c) {
  CorpusFlags f;
  f.verify = stable();
  f.verify.out_dir = fs::temp_directory_path() / "filtra-acceptance";
  fs::remove_all(*f.verify.out_dir);
  auto res = run_corpus(kCorpus, f);
  const auto& jobs = res.summary["jobs"];
  c.expect(jobs.size() >= 8, "corpus size");
  for (const char* need : {"cusp", "two_planes", "depth_zero", "sally_adic", "sally_ratliff_rush", "regular_d1",
                           "regular_d2", "regular_d3", "semigroup_345", "semigroup_4567"}) {
    bool found = false;
    for (const auto& j : jobs) found = found || j["name"] == need;
    c.expect(found, std::string("corpus has ") + need);
  }
  for (const auto& j : jobs) {
    std::string name = j["name"];
    if (!j["error"].is_null()) {
      c.expect(false, name + ": error");
      continue;
    }
    c.expect(j["gap"].get<long long>() >= 0, name + ": gap < 0");
    c.expect(j["equivalence"] != "fail", name + ": equivalence");
    const auto& cond = j["conditions"];
    if (cond["C1"] == true && cond["C2"] == true)
      c.expect(j["equivalence"] == "pass" && j["equality_holds"] == j["condition2_holds"], name + ": dual path");
    json base = run(name);
    int h = base["filtration"]["horizon"].get<int>();
    json wide = run(name, h + 3);
    for (const char* k : {"I", "Q", "S"})
      c.expect(base["coefficients"][k]["e"] == wide["coefficients"][k]["e"], name + ": fit at H+3 (" + k + ")");
  }
}

void crit7(Criterion& c) {
  for (int d = 1; d <= 3; ++d) {
    std::string name = "regular_d" + std::to_string(d);
    json r = run(name);
    std::vector<long long> unit(d + 1, 0);
    unit[0] = 1;
    c.expect(r["ring"]["d"] == d, name + ": d");
    c.expect(ev(r, "I") == unit && ev(r, "Q") == unit, name + ": e");
    c.expect(r["equality_holds"] == true, name + ": equality");
    c.expect(check_is(r, "remark_I1_eq_Q", "pass"), name + ": I1 = Q branch");
    for (const char* k : {"W_in_I2", "I_n+2_in_QnI2+W", "I_n+2_in_QnI1", "Qn_cap_I_n+1", "colon_in_I2+Q"})
      c.expect(check_is(r, k, "pass"), name + ": " + k);
    if (d >= 2) c.expect(check_is(r, "e2_identity", "pass"), name + ": e2 identity");
    if (d >= 3) c.expect(check_is(r, "ei_identity_i3", "pass"), name + ": ei identity");
    for (const auto& ch : r["checks"]) c.expect(ch["status"] != "fail", name + ": " + ch["name"].get<std::string>());
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> body;
    double limit_s;
  };
  std::vector<Entry> all = {
      {1, "cusp, m-adic, Q=(x)", crit1, 5},
      {2, "two planes, Buchsbaum", crit2, 20},
      {3, "depth zero", crit3, 5},
      {4, "Sally module nonvanishing", crit4, 10},
      {5, "oracle equivalence on random monomial ideals", crit5, 0},
      {6, "corpus property suite", crit6, 300},
      {7, "regular rings, I = m = Q", crit7, 0},
  };
  int failed = 0;
  for (auto& e : all) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.body(c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.limit_s > 0 && s >= e.limit_s) c.failures.push_back("runtime " + std::to_string(s) + " s");
    bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.2f s)", ok ? "PASS" : "FAIL", e.id, e.title, s);
    for (const auto& f : c.failures) std::printf(" [%s]", f.c_str());
    std::printf("\n");
  }
  return failed ? 1 : 0;
}
