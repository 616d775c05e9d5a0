#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "filtra/cli.hpp"
#include "filtra/error.hpp"
#include "filtra/parser.hpp"

namespace filtra {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring, const std::string& what) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_polynomial(texts[i], ring));
    } catch (const Error& e) {
      throw Error(e.kind(), what + "[" + std::to_string(i) + "] \"" + texts[i] + "\": " + e.what(), e.offset());
    }
  }
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) raise(ErrorKind::ConfigError, "cannot write " + p.string());
  out << text;
}

void write_reports(const JobOutcome& o, const std::string& name, const VerifyFlags& flags) {
  const bool js = flags.format != ReportFormat::Markdown, md = flags.format != ReportFormat::Json;
  if (flags.out_dir) {
    std::filesystem::create_directories(*flags.out_dir);
    if (js) write_file(*flags.out_dir / (name + ".json"), o.report.dump(2) + "\n");
    if (md) write_file(*flags.out_dir / (name + ".md"), render_markdown(o.report));
  } else {
    if (js) std::cout << o.report.dump(2) << "\n";
    if (md) std::cout << render_markdown(o.report);
  }
}

json error_json(const std::string& stage, const std::string& kind, const std::string& message,
                std::optional<std::size_t> offset = std::nullopt) {
  json e = {{"stage", stage}, {"kind", kind}, {"message", message}};
  e["offset"] = offset ? json(*offset) : json(nullptr);
  return e;
}

json summary_entry(const std::string& name, const JobOutcome& o) {
  const json& r = o.report;
  json s = {{"name", name}, {"exit_code", o.exit_code}, {"status", r.value("status", "error")}};
  s["error"] = r.contains("error") ? r["error"] : json(nullptr);
  if (!s["error"].is_null()) return s;
  s["d"] = r["ring"]["d"];
  s["w_length"] = r["ring"]["w_length"];
  s["e_I"] = r["coefficients"]["I"]["e"];
  s["e_Q"] = r["coefficients"]["Q"]["e"];
  s["e_S"] = r["coefficients"]["S"]["e"];
  s["gap"] = r["inequality"]["gap"];
  s["equality_holds"] = r["equality_holds"];
  s["condition2_holds"] = r["condition2"]["holds"];
  s["equivalence"] = r["equivalence"];
  s["conditions"] = json::object();
  for (const char* c : {"C0", "C1", "C2", "C3"}) s["conditions"][c] = r["conditions"][c]["holds"];
  s["failed_checks"] = json::array();
  for (const auto& c : r["checks"])
    if (c["status"] == "fail") s["failed_checks"].push_back(c["name"]);
  return s;
}

}  // namespace

JobOutcome run_job(const JobConfig& cfg, const VerifyFlags& flags) {
  JobOutcome out;
  json& rep = out.report;
  std::string stage = "config";
  const auto start = Clock::now();
  json timings = json::object();
  try {
    const int H = flags.horizon.value_or(cfg.horizon);
    if (H < 6) raise(ErrorKind::ConfigError, "horizon must be >= 6");

    stage = "parse";
    RingPtr amb = PolyRing::create(cfg.vars, cfg.field);
    auto rels = parse_all(cfg.relations, amb, "relations");
    std::vector<std::vector<Polynomial>> ideals;
    for (std::size_t i = 0; i < cfg.ideals.size(); ++i)
      ideals.push_back(parse_all(cfg.ideals[i], amb, "ideals[" + std::to_string(i) + "]"));
    auto gens = parse_all(cfg.reduction_gens, amb, "reduction.gens");

    stage = "ring";
    auto t = Clock::now();
    LocalRingPtr R = LocalRing::create(amb, rels);
    R->w_length();
    timings["ring"] = seconds_since(t);

    stage = "filtration";
    std::vector<IdealHandle> handles;
    for (const auto& g : ideals) handles.push_back(R->ideal(g));
    Filtration filt = cfg.filtration_type == "adic"           ? Filtration::adic(handles.front(), H)
                      : cfg.filtration_type == "ratliff_rush" ? Filtration::ratliff_rush(handles.front(), H, cfg.k_max)
                                                              : Filtration::explicit_list(handles, H);
    filt.get(H);

    stage = "reduction";
    t = Clock::now();
    ReductionSystem q = cfg.reduction_type == "search" ? find_reduction(filt, cfg.attempts, cfg.seed)
                                                       : ReductionSystem::from_generators(R, gens);
    timings["filtration_and_reduction"] = seconds_since(t);

    AnalysisOptions opts;
    opts.power_bound = cfg.power_bound;
    opts.strict = cfg.strict;
    opts.checks = cfg.checks;
    opts.stage = &stage;
    t = Clock::now();
    Instance in = prepare_instance(filt, q, opts);
    timings["analysis"] = seconds_since(t);
    t = Clock::now();
    VerdictReport r = build_report(in, opts);
    timings["checks"] = seconds_since(t);

    stage = "report";
    rep = report_to_json(r);
    rep["error"] = nullptr;
    out.exit_code = r.all_applicable_pass() ? 0 : 2;
  } catch (const Error& e) {
    rep = json::object();
    rep["error"] = error_json(stage, std::string(to_string(e.kind())), e.what(), e.offset());
    out.exit_code = 1;
  } catch (const std::exception& e) {
    rep = json::object();
    rep["error"] = error_json(stage, "InternalError", e.what());
    out.exit_code = 1;
  }
  rep["version"] = kReportVersion;
  rep["job"] = cfg.name;
  rep["config"] = cfg.echo;
  rep["exit_code"] = out.exit_code;
  rep["status"] = out.exit_code == 0 ? "ok" : out.exit_code == 2 ? "violation" : "error";
  if (!flags.stable_output) {
    timings["total"] = seconds_since(start);
    rep["timings"] = timings;
  }
  return out;
}

int run_verify(const std::filesystem::path& config_path, const VerifyFlags& flags) {
  JobConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const Error& e) {
    std::cerr << "filtra: config: " << e.what() << "\n";
    return 1;
  }
  JobOutcome o = run_job(cfg, flags);
  try {
    write_reports(o, cfg.name, flags);
  } catch (const Error& e) {
    std::cerr << "filtra: report: " << e.what() << "\n";
    return 1;
  }
  if (o.exit_code == 1) {
    const auto& e = o.report["error"];
    std::cerr << "filtra: " << cfg.name << ": " << e["stage"].get<std::string>() << ": "
              << e["message"].get<std::string>() << "\n";
  } else if (o.exit_code == 2) {
    std::cerr << "filtra: " << cfg.name << ": VIOLATION - see the report\n";
  }
  return o.exit_code;
}

CorpusOutcome run_corpus(const std::filesystem::path& dir, const CorpusFlags& flags) {
  if (!std::filesystem::is_directory(dir)) raise(ErrorKind::ConfigError, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& ent : std::filesystem::directory_iterator(dir))
    if (ent.is_regular_file() && ent.path().extension() == ".json") files.push_back(ent.path());
  if (files.empty()) raise(ErrorKind::ConfigError, "no *.json configs in " + dir.string());
  std::sort(files.begin(), files.end());

  std::vector<std::string> names(files.size());
  std::vector<JobOutcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      names[i] = files[i].stem().string();
      try {
        JobConfig cfg = load_config(files[i]);
        names[i] = cfg.name;
        outcomes[i] = run_job(cfg, flags.verify);
      } catch (const Error& e) {
        outcomes[i].exit_code = 1;
        outcomes[i].report = {{"version", kReportVersion}, {"job", names[i]}, {"exit_code", 1}, {"status", "error"},
                              {"config", nullptr}};
        outcomes[i].report["error"] = error_json("config", std::string(to_string(e.kind())), e.what());
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(flags.jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CorpusOutcome res;
  json& s = res.summary;
  s["version"] = kSummaryVersion;
  s["jobs"] = json::array();
  json counts = {{"equality", 0}, {"strict", 0}, {"violation", 0}, {"error", 0}};
  bool any2 = false, any1 = false;
  for (std::size_t i = 0; i < files.size(); ++i) {
    json e = summary_entry(names[i], outcomes[i]);
    if (outcomes[i].exit_code == 1) {
      any1 = true;
      counts["error"] = counts["error"].get<int>() + 1;
    } else {
      if (outcomes[i].exit_code == 2) {
        any2 = true;
        counts["violation"] = counts["violation"].get<int>() + 1;
      }
      const char* k = e["gap"].get<long long>() == 0 ? "equality" : "strict";
      counts[k] = counts[k].get<int>() + 1;
    }
    s["jobs"].push_back(e);
  }
  s["counts"] = counts;
  res.exit_code = any2 ? 2 : any1 ? 1 : 0;
  s["exit_code"] = res.exit_code;

  const std::filesystem::path out = flags.verify.out_dir.value_or("filtra-out");
  VerifyFlags per = flags.verify;
  per.out_dir = out;
  for (std::size_t i = 0; i < files.size(); ++i) write_reports(outcomes[i], names[i], per);
  write_file(out / "summary.json", s.dump(2) + "\n");
  write_file(out / "summary.md", render_summary_markdown(s));
  return res;
}

}  // namespace filtra
