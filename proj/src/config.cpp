#include <fstream>
#include <regex>

#include "filtra/cli.hpp"
#include "filtra/error.hpp"

namespace filtra {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& key, const std::string& msg) { raise(ErrorKind::ConfigError, key + ": " + msg); }

void allow_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) bad(where + "." + k, "unknown key");
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) bad(where + "." + key, "missing");
  return obj.at(key);
}

std::vector<std::string> string_list(const json& v, const std::string& where, bool non_empty) {
  if (!v.is_array()) bad(where, "expected an array of strings");
  if (non_empty && v.empty()) bad(where, "must not be empty");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) bad(where, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

long long integer(const json& v, const std::string& where, long long lo) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  long long x = v.get<long long>();
  if (x < lo) bad(where, "must be >= " + std::to_string(lo));
  return x;
}

}  // namespace

JobConfig parse_config(const json& doc, const std::string& default_name) {
  if (!doc.is_object()) bad("$", "config must be a JSON object");
  allow_keys(doc, "$", {"name", "description", "ring", "filtration", "reduction", "horizon", "power_bound", "checks",
                        "strict"});
  JobConfig c;
  c.echo = doc;
  c.name = default_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string() || doc["name"].get<std::string>().empty()) bad("$.name", "expected a non-empty string");
    c.name = doc["name"].get<std::string>();
  }
  if (doc.contains("description") && !doc["description"].is_string()) bad("$.description", "expected a string");

  const json& ring = require(doc, "$", "ring");
  if (!ring.is_object()) bad("$.ring", "expected an object");
  allow_keys(ring, "$.ring", {"field", "vars", "relations"});
  if (ring.contains("field")) {
    const json& f = ring["field"];
    if (f.is_string() && f.get<std::string>() == "q") {
      c.field = Field::rationals();
    } else if (f.is_object() && f.size() == 1 && f.contains("fp")) {
      long long p = integer(f["fp"], "$.ring.field.fp", 2);
      try {
        c.field = Field::prime(static_cast<std::uint64_t>(p));
      } catch (const Error& e) {
        bad("$.ring.field.fp", e.what());
      }
    } else {
      bad("$.ring.field", "expected \"q\" or {\"fp\": p}");
    }
  }
  c.vars = string_list(require(ring, "$.ring", "vars"), "$.ring.vars", true);
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string> seen;
  for (const auto& v : c.vars) {
    if (!std::regex_match(v, ident)) bad("$.ring.vars", "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) bad("$.ring.vars", "duplicate variable '" + v + "'");
  }
  if (ring.contains("relations")) c.relations = string_list(ring["relations"], "$.ring.relations", false);

  const json& filt = require(doc, "$", "filtration");
  if (!filt.is_object()) bad("$.filtration", "expected an object");
  const json& type = require(filt, "$.filtration", "type");
  if (!type.is_string()) bad("$.filtration.type", "expected a string");
  c.filtration_type = type.get<std::string>();
  if (c.filtration_type == "adic" || c.filtration_type == "ratliff_rush") {
    allow_keys(filt, "$.filtration", {"type", "ideal", "k_max"});
    c.ideals.push_back(string_list(require(filt, "$.filtration", "ideal"), "$.filtration.ideal", true));
    if (filt.contains("k_max")) {
      if (c.filtration_type != "ratliff_rush") bad("$.filtration.k_max", "only for ratliff_rush");
      c.k_max = static_cast<int>(integer(filt["k_max"], "$.filtration.k_max", 1));
    }
  } else if (c.filtration_type == "explicit") {
    allow_keys(filt, "$.filtration", {"type", "ideals"});
    const json& list = require(filt, "$.filtration", "ideals");
    if (!list.is_array() || list.empty()) bad("$.filtration.ideals", "expected a non-empty array of ideals");
    for (std::size_t i = 0; i < list.size(); ++i)
      c.ideals.push_back(string_list(list[i], "$.filtration.ideals[" + std::to_string(i) + "]", true));
  } else {
    bad("$.filtration.type", "expected adic, ratliff_rush or explicit");
  }

  const json& red = require(doc, "$", "reduction");
  if (!red.is_object()) bad("$.reduction", "expected an object");
  const json& rtype = require(red, "$.reduction", "type");
  if (!rtype.is_string()) bad("$.reduction.type", "expected a string");
  c.reduction_type = rtype.get<std::string>();
  if (c.reduction_type == "explicit") {
    allow_keys(red, "$.reduction", {"type", "gens"});
    c.reduction_gens = string_list(require(red, "$.reduction", "gens"), "$.reduction.gens", true);
  } else if (c.reduction_type == "search") {
    allow_keys(red, "$.reduction", {"type", "attempts", "seed"});
    if (red.contains("attempts")) c.attempts = static_cast<int>(integer(red["attempts"], "$.reduction.attempts", 1));
    if (red.contains("seed")) c.seed = static_cast<std::uint64_t>(integer(red["seed"], "$.reduction.seed", 0));
  } else {
    bad("$.reduction.type", "expected explicit or search");
  }

  if (doc.contains("horizon")) c.horizon = static_cast<int>(integer(doc["horizon"], "$.horizon", 6));
  if (doc.contains("power_bound")) c.power_bound = static_cast<int>(integer(doc["power_bound"], "$.power_bound", 1));
  if (doc.contains("strict")) {
    if (!doc["strict"].is_boolean()) bad("$.strict", "expected a boolean");
    c.strict = doc["strict"].get<bool>();
  }
  if (doc.contains("checks")) {
    for (const auto& name : string_list(doc["checks"], "$.checks", false)) {
      const auto& all = all_check_names();
      if (std::find(all.begin(), all.end(), name) == all.end()) bad("$.checks", "unknown check '" + name + "'");
      c.checks.insert(name);
    }
  }
  return c;
}

JobConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ConfigError, "cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::ConfigError, path.string() + ": " + e.what());
  }
  return parse_config(doc, path.stem().string());
}

}  // namespace filtra
