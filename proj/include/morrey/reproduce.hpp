#pragma once

#include <string>
#include <vector>

#include "morrey/functionals.hpp"
#include "morrey/io.hpp"
#include "morrey/witnesses.hpp"

namespace morrey {

struct CheckRow {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;  // relative; 0 means exact equality was required
  bool pass = false;
  bool informational = false;  // reported but not a pass/fail gate
  std::string note;
};

// Self-contained machine-checked report: re-runnable from its own params.
struct ReproductionReport {
  std::string theorem;
  ordered_json params;
  std::vector<CheckRow> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.informational && !c.pass) return false;
    }
    return true;
  }
};

std::vector<Rational> default_dw_grid();

// Theorem 2: discrete witness norms, NJ and James values, and the DW curve
// (both couple variants; the as-stated one is informational).
ReproductionReport reproduce_thm2(const MorreyParams& params, bool exact,
                                  const std::vector<Rational>& dw_grid = default_dw_grid(),
                                  std::optional<std::int64_t> n = std::nullopt);

// Theorem 1 at d = 1 with global norms: the norm equality chain, NJ/James,
// and the continuous DW couple against (4+2r)/(1+r).
ReproductionReport reproduce_thm1(const MorreyParams& params, const OptimizerConfig& opt = {});

// The local Morrey remark: the same chain under centered-ball norms, any d.
ReproductionReport reproduce_local_remark(const MorreyParams& params);

// DW curves alone, per r.
ReproductionReport reproduce_dw_curve_discrete(const MorreyParams& params, bool exact,
                                               const std::vector<Rational>& grid);
ReproductionReport reproduce_dw_curve_continuous(const MorreyParams& params,
                                                 const std::vector<double>& grid,
                                                 const OptimizerConfig& opt = {});

ordered_json report_to_json(const ReproductionReport& rep);
std::string report_to_text(const ReproductionReport& rep);

}  // namespace morrey
