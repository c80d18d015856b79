#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daha1/laurent.hpp"
#include "daha1/report.hpp"

namespace daha1 {

struct SuiteConfig {
  std::string suite;
  Json grid = Json::object();
  std::optional<double> tol;
  Json truncation = Json::object();
};

const std::vector<std::string>& suite_names();

// Validates the document; throws ConfigError.
SuiteConfig parse_config(const Json& doc);
SuiteConfig load_config(const std::string& path);

// Every grid point of the suite, in config order. Errors inside a check
// become failing reports. jobs > 1 runs grid points on that many threads.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg, int jobs = 1);

// Checks assembled from several modules.
std::vector<CheckReport> check_epoly(int n);
CheckReport check_epoly_closed_form(int n);  // n in {-1, 0, 1}
CheckReport check_ct_orthogonality(int n, int m);
// {.,.} on Re x = 1/4 against Re x = 0 plus the residue at -k/2, -1/2 < Re k < 0.
CheckReport check_single_residue(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt,
                                 double tol = 1e-8);
CheckReport check_branch_agreement(const LaurentPoly& f, const LaurentPoly& g, const ParamPoint& pt,
                                   double tol = 1e-8);
// Extrapolated one-sided limits at Re k = wall.
CheckReport check_wall_crossing(const LaurentPoly& f, const LaurentPoly& g, double q, double wall,
                                double tol = 1e-6);
// mu_bullet at a residual point over mu_bullet(-k/2), direct product against the closed ratio.
CheckReport check_weight_ratio(const ParamPoint& pt, int j, int sign, double tol = 1e-10);

}  // namespace daha1
