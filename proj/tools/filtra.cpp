#include <iostream>

#include "CLI11.hpp"
#include "filtra/cli.hpp"
#include "filtra/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients of admissible filtrations"};
  app.require_subcommand(1);

  filtra::VerifyFlags vflags;
  std::string config, format = "json", out;
  int horizon = 0;
  auto* verify = app.add_subcommand("verify", "run one job config");
  verify->add_option("config", config, "job config (JSON)")->required();
  verify->add_option("--horizon", horizon, "override the config horizon")->check(CLI::Range(6, 1000));
  verify->add_option("--report", format, "json, md or both")->check(CLI::IsMember({"json", "md", "both"}));
  verify->add_option("--out", out, "directory for reports (default: stdout)");
  verify->add_flag("--stable-output", vflags.stable_output, "omit timings");

  filtra::CorpusFlags cflags;
  std::string dir, cformat = "both", cout_dir;
  int chorizon = 0;
  auto* corpus = app.add_subcommand("corpus", "run every config in a directory");
  corpus->add_option("dir", dir, "directory of job configs")->required();
  corpus->add_option("--jobs", cflags.jobs, "parallel jobs")->check(CLI::Range(1, 256));
  corpus->add_option("--horizon", chorizon, "override every config horizon")->check(CLI::Range(6, 1000));
  corpus->add_option("--report", cformat, "json, md or both")->check(CLI::IsMember({"json", "md", "both"}));
  corpus->add_option("--out", cout_dir, "directory for reports (default: filtra-out)");
  corpus->add_flag("--stable-output", cflags.verify.stable_output, "omit timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  auto to_format = [](const std::string& f) {
    return f == "md" ? filtra::ReportFormat::Markdown : f == "both" ? filtra::ReportFormat::Both
                                                                    : filtra::ReportFormat::Json;
  };
  if (*verify) {
    if (horizon) vflags.horizon = horizon;
    vflags.format = to_format(format);
    if (!out.empty()) vflags.out_dir = out;
    return filtra::run_verify(config, vflags);
  }
  if (chorizon) cflags.verify.horizon = chorizon;
  cflags.verify.format = to_format(cformat);
  if (!cout_dir.empty()) cflags.verify.out_dir = cout_dir;
  try {
    auto res = filtra::run_corpus(dir, cflags);
    std::cout << filtra::render_summary_markdown(res.summary);
    if (res.exit_code == 2) std::cerr << "filtra: corpus contains violations\n";
    return res.exit_code;
  } catch (const filtra::Error& e) {
    std::cerr << "filtra: corpus: " << e.what() << "\n";
    return 1;
  }
}
