#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ind4 {

/// One named density formula from the bounds table: an objective over a box
/// (plus optional linear constraint handled by its optimizer strategy).
struct FormulaInfo {
  std::string name;
  int arity = 0;
  std::function<double(std::span<const double>)> eval;
  double paper_value = 0.0;               // reported optimum (lower-bound column)
  std::vector<double> paper_argmax;       // empty when the paper states none
  std::optional<double> closed_form;      // exact radical expression, when given
  bool one_sided = false;                 // paper reports only ">~"
};

const std::vector<FormulaInfo>& formula_table();
const FormulaInfo& formula(const std::string& name);

double formula_eval(const std::string& name, std::span<const double> params);

/// I1 = int p(1-p); I2 = int_0^1 p(a)^2 int_0^a p(1-p); I3 = nested triple.
/// Exposed for the optimizer and tests.
double c20_objective(double x, double y, std::span<const double> coeffs);
double c26_objective(double x, double y, std::span<const double> coeffs);

/// Largest violation of p(x) in [0,1] over a uniform grid (0 when feasible).
double poly_range_violation(std::span<const double> coeffs, int grid = 1000);

std::string formula_table_csv();

}  // namespace ind4
