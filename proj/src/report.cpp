#include <sstream>

#include "filtra/cli.hpp"

namespace filtra {

namespace {

using nlohmann::json;

json condition_json(const ConditionResult& c) {
  json j = {{"holds", c.holds}};
  j["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
  return j;
}

json clause_json(const ClauseResult& c) {
  json j = {{"holds", c.holds}};
  j["witness_n"] = c.witness_n < 0 ? json(nullptr) : json(c.witness_n);
  j["witness"] = c.witness.empty() ? json(nullptr) : json(c.witness);
  return j;
}

json coeffs_json(const HilbertCoefficients& h) {
  return {{"e", h.e}, {"postulation", h.postulation}, {"window", h.window}, {"degree", h.degree}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string row(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (const auto& c : cells) s += " " + c + " |";
  return s + "\n";
}

std::string vec(const json& a) {
  std::string s;
  for (const auto& v : a) s += (s.empty() ? "" : ", ") + cell(v);
  return "(" + s + ")";
}

}  // namespace

json report_to_json(const VerdictReport& r) {
  json j;
  j["version"] = kReportVersion;
  j["ring"] = {{"field", r.field}, {"vars", r.vars},         {"relations", r.relations},
               {"d", r.d},         {"w_length", r.w_length}, {"depth_positive", r.depth_positive}};
  j["filtration"] = {{"type", r.filtration_kind}, {"horizon", r.horizon}, {"reduction_number", r.reduction_number}};
  j["reduction"] = {{"gens", r.reduction_gens}};
  j["reduction"]["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["reduction"]["attempt"] = r.seed ? json(r.attempt) : json(nullptr);
  j["conditions"] = {{"C0", condition_json(r.c0)},
                     {"C1", condition_json(r.c1)},
                     {"C2", condition_json(r.c2)},
                     {"C3", condition_json(r.c3)}};
  j["conditions"]["C1"]["power_bound"] = r.power_bound;
  j["conditions"]["C1"]["scope"] = "verified up to power_bound";
  j["superficial"] = {{"element", r.reduction_gens.empty() ? json(nullptr) : json(r.reduction_gens.front())}};
  j["superficial"]["c"] = r.superficial_c ? json(*r.superficial_c) : json(nullptr);
  j["lengths"] = {{"A/I_n", r.h.values},   {"A/Q^n", r.hQ.values},      {"A/Q^nI_1", r.hQI1.values},
                  {"S_n", r.g.values},     {"A/I_1", r.l_A_I1},         {"A/(I_2+Q)", r.l_A_I2Q},
                  {"I_1/(I_2+Q)", r.l_I1_I2Q}, {"A/Q", r.l_A_Q}};
  j["coefficients"] = {{"I", coeffs_json(r.eI)}, {"Q", coeffs_json(r.eQ)}};
  j["coefficients"]["S"] = {{"dim", r.eS.dim},
                            {"vanishes", r.eS.vanishes},
                            {"e", r.eS.dim > 0 ? json(r.eS.coeffs.e) : json::array()},
                            {"postulation", r.eS.coeffs.postulation}};
  j["inequality"] = {{"lhs", r.inequality.lhs},
                     {"rhs", r.inequality.rhs},
                     {"gap", r.inequality.gap},
                     {"second_part", r.inequality.second_part},
                     {"holds", r.master_inequality_ok},
                     {"sign_convention", "minus"}};
  j["equality_holds"] = r.equality_holds;
  j["condition2"] = {{"holds", r.condition2.holds()},
                     {"clause1", clause_json(r.condition2.clause1)},
                     {"clause2", clause_json(r.condition2.clause2)},
                     {"clause3", clause_json(r.condition2.clause3)}};
  j["equivalence"] = to_string(r.equivalence);
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json cj = {{"name", c.name}, {"status", to_string(c.status)}};
    cj["detail"] = c.detail.empty() ? json(nullptr) : json(c.detail);
    j["checks"].push_back(cj);
  }
  if (r.h0)
    j["h0_pieces"] = {{"pieces", r.h0->pieces}, {"sums_to_w", r.h0->sums_to_w}, {"cross_checked", r.h0->cross_checked}};
  else
    j["h0_pieces"] = nullptr;
  j["warnings"] = r.warnings;
  j["scope"] = "statements for all n are verified for n <= horizon";
  return j;
}

std::string render_markdown(const json& j) {
  std::ostringstream o;
  o << "# " << cell(j.value("job", json("job"))) << "\n\n";
  const int code = j.value("exit_code", 0);
  if (j.contains("error") && !j["error"].is_null()) {
    const auto& e = j["error"];
    o << "**ERROR** in stage `" << cell(e["stage"]) << "`: " << cell(e["kind"]) << ": " << cell(e["message"]) << "\n";
    return o.str();
  }
  if (code == 2) {
    std::string what;
    if (j["equivalence"] == "fail") what += "equivalence, ";
    if (!j["inequality"]["holds"].get<bool>()) what += "master inequality, ";
    for (const auto& c : j["checks"])
      if (c["status"] == "fail") what += c["name"].get<std::string>() + ", ";
    if (what.size() >= 2) what.resize(what.size() - 2);
    o << "**VIOLATION**: " << what << "\n\n";
  }
  else
    o << "**OK**: all applicable checks pass.\n\n";
  const auto& R = j["ring"];
  o << "Ring: " << cell(R["field"]) << vec(R["vars"]) << " / " << vec(R["relations"]) << ", d = " << cell(R["d"])
    << ", l(W) = " << cell(R["w_length"]) << ", depth > 0: " << yes(R["depth_positive"].get<bool>()) << "\n\n";
  o << "Filtration: " << cell(j["filtration"]["type"]) << ", horizon " << cell(j["filtration"]["horizon"])
    << ", reduction Q = " << vec(j["reduction"]["gens"]) << ", reduction number "
    << cell(j["filtration"]["reduction_number"]) << "\n\n";

  o << "## Conditions\n\n" << row({"condition", "holds", "witness"}) << row({"---", "---", "---"});
  for (const char* c : {"C0", "C1", "C2", "C3"}) {
    const auto& x = j["conditions"][c];
    std::string name = c;
    if (name == "C1") name += " (verified up to power_bound " + cell(x["power_bound"]) + ")";
    o << row({name, yes(x["holds"].get<bool>()), cell(x["witness"])});
  }

  o << "\n## Coefficients\n\n" << row({"", "e", "postulation"}) << row({"---", "---", "---"});
  for (const char* c : {"I", "Q"})
    o << row({std::string("e(") + c + ")", vec(j["coefficients"][c]["e"]), cell(j["coefficients"][c]["postulation"])});
  const auto& S = j["coefficients"]["S"];
  o << row({"e(S)", S["vanishes"].get<bool>() ? "S = 0" : vec(S["e"]) + ", dim " + cell(S["dim"]),
            cell(S["postulation"])});

  o << "\n## Lengths\n\n" << row({"function", "values"}) << row({"---", "---"});
  for (const char* k : {"A/I_n", "A/Q^n", "A/Q^nI_1", "S_n"}) o << row({k, vec(j["lengths"][k])});
  for (const char* k : {"A/I_1", "A/(I_2+Q)", "I_1/(I_2+Q)", "A/Q"}) o << row({k, cell(j["lengths"][k])});

  const auto& in = j["inequality"];
  o << "\n## Inequality\n\n"
    << "lhs = " << cell(in["lhs"]) << ", rhs = " << cell(in["rhs"]) << ", gap = " << cell(in["gap"])
    << ", rhs >= 0: " << yes(in["second_part"].get<bool>()) << "\n\n";
  o << "Equality: " << yes(j["equality_holds"].get<bool>())
    << "; condition (2): " << yes(j["condition2"]["holds"].get<bool>()) << "; equivalence: " << cell(j["equivalence"])
    << "\n\n";
  o << row({"clause", "holds", "witness"}) << row({"---", "---", "---"});
  for (const char* c : {"clause1", "clause2", "clause3"}) {
    const auto& x = j["condition2"][c];
    o << row({c, yes(x["holds"].get<bool>()), cell(x["witness"])});
  }

  o << "\n## Checks\n\n" << row({"check", "status", "detail"}) << row({"---", "---", "---"});
  for (const auto& c : j["checks"]) o << row({cell(c["name"]), cell(c["status"]), cell(c["detail"])});
  if (!j["h0_pieces"].is_null()) o << "\nH0 pieces: " << vec(j["h0_pieces"]["pieces"]) << "\n";
  if (!j["warnings"].empty()) {
    o << "\n## Warnings\n\n";
    for (const auto& w : j["warnings"]) o << "- " << cell(w) << "\n";
  }
  o << "\n_" << cell(j["scope"]) << "._\n";
  return o.str();
}

std::string render_summary_markdown(const json& s) {
  std::ostringstream o;
  o << "# Corpus summary\n\n";
  const auto& c = s["counts"];
  o << "equality " << cell(c["equality"]) << ", strict " << cell(c["strict"]) << ", violation " << cell(c["violation"])
    << ", error " << cell(c["error"]) << "; exit code " << cell(s["exit_code"]) << "\n\n";
  o << row({"job", "exit", "d", "e(I)", "e(Q)", "gap", "equality", "condition (2)", "equivalence", "failed checks"})
    << row({"---", "---", "---", "---", "---", "---", "---", "---", "---", "---"});
  for (const auto& jb : s["jobs"]) {
    if (!jb["error"].is_null()) {
      o << row({cell(jb["name"]), cell(jb["exit_code"]), "-", "-", "-", "-", "-", "-", "-",
                cell(jb["error"]["kind"]) + " (" + cell(jb["error"]["stage"]) + ")"});
      continue;
    }
    std::string failed;
    for (const auto& f : jb["failed_checks"]) failed += (failed.empty() ? "" : ", ") + cell(f);
    o << row({cell(jb["name"]), cell(jb["exit_code"]), cell(jb["d"]), vec(jb["e_I"]), vec(jb["e_Q"]), cell(jb["gap"]),
              yes(jb["equality_holds"].get<bool>()), yes(jb["condition2_holds"].get<bool>()), cell(jb["equivalence"]),
              failed.empty() ? "-" : failed});
  }
  return o.str();
}

}  // namespace filtra
