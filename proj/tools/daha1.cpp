// daha1 <suite> --config file.json [--out report.ndjson] [--jobs N]
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "daha1/errors.hpp"
#include "daha1/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Run a verification suite and write one JSON report per line."};
  std::string suite, config, out;
  int jobs = 1;
  app.add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(daha1::suite_names()));
  app.add_option("--config", config, "JSON config file")->required();
  app.add_option("--out", out, "report file (default stdout)");
  app.add_option("--jobs", jobs, "grid points run in parallel")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<daha1::CheckReport> reports;
  try {
    daha1::SuiteConfig cfg = daha1::load_config(config);
    if (cfg.suite != suite)
      throw daha1::ConfigError("config declares suite '" + cfg.suite + "' but '" + suite + "' was requested");
    reports = daha1::run_suite(cfg, jobs);
  } catch (const daha1::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
  }
  std::ostream& os = out.empty() ? std::cout : file;
  bool ok = true;
  for (const auto& r : reports) {
    os << r.to_json().dump() << "\n";
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
