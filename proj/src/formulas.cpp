#include "ind4/formulas.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ind4/polynomial.hpp"

namespace ind4 {

namespace {

double c7_eval(std::span<const double> v) {
  double a = v[0], b = v[1], c = v[2], d = v[3];
  double num = 24.0 * ((a + b) * (a + b) * c * c + 2 * a * b * d * (b + 2 * c));
  double den = 1.0 - 2 * a * a * a * a - 2 * b * b * b * b - 2 * c * c * c * c - d * d * d * d;
  return num / den;
}

double c9_eval(double x) {
  double t = 1 - 2 * x;
  return 32 * t * x * x * x / (1 - t * t * t * t);
}

double c15_eval(double x) {
  double t = 1 - 2 * x;
  return 12 * x * x * t * t / (1 - 2 * x * x * x * x);
}

double c19_eval(double x) {
  double t = 1 - 2 * x;
  return 24 * t * x * x * x / (1 - t * t * t * t);
}

// density of the row-21 class in S^1(alpha); valid on [1/3, 1/2]
double c21_eval(double a) {
  double t = 3 * a - 1;
  return 4 * (a * a * a - t * t * t);
}

double c22_eval(double y, double q) {
  double om = 1 - q;
  double a0 = 1 - 2 * y / om;
  return a0 * a0 * 12 * y * y / (om * om) +
         24 * q * y * y * y / (om * om) * (1.0 / (1 + q + q * q) - y / (1 - q * q * q * q));
}

double c23_eval(double x) {
  double om = 1 - x;
  return (1.6 * x * om * om * om + (8.0 / 315) * om * om * om * om) / (1 - x * x * x * x);
}

double c28_eval(double x) {
  double om = 1 - x;
  return (x * x * x * x / 8 + x * x * x * om) / (1 - om * om * om * om);
}

Poly<double> poly_of(std::span<const double> coeffs) {
  return Poly<double>(std::vector<double>(coeffs.begin(), coeffs.end()));
}

}  // namespace

double poly_range_violation(std::span<const double> coeffs, int grid) {
  Poly<double> p = poly_of(coeffs);
  double worst = 0;
  for (int g = 0; g <= grid; ++g) {
    double v = p.eval(double(g) / grid);
    worst = std::max({worst, -v, v - 1});
  }
  return worst;
}

double c20_objective(double x, double y, std::span<const double> coeffs) {
  double z = 1 - x - y;
  if (x < 0 || y < 0 || z < 0) return -1;
  Poly<double> p = poly_of(coeffs);
  Poly<double> one_minus = Poly<double>::one() - p;
  Poly<double> pq = p * one_minus;
  double i1 = pq.integrate(0, 1);
  Poly<double> Q = pq.antiderivative();
  double i2 = (p * p * Q).integrate(0, 1);
  Poly<double> R = one_minus.antiderivative();
  Poly<double> S = (p * R).antiderivative();
  double i3 = (one_minus * S).integrate(0, 1);
  return 24 * y * z / (1 - x * x * x * x) * (x * y * i1 + y * z * i2 + z * z * i3);
}

double c26_objective(double x, double y, std::span<const double> coeffs) {
  double z = 1 - x - y;
  if (x < 0 || y < 0 || z < 0) return -1;
  Poly<double> p = poly_of(coeffs);
  Poly<double> one_minus = Poly<double>::one() - p;
  Poly<double> pq = p * one_minus;
  double i1 = pq.integrate(0, 1);
  Poly<double> T = (one_minus * one_minus).antiderivative();
  double i2 = (pq * T).integrate(0, 1);
  return 24 * y * y * z / (1 - x * x * x * x) * (x * i1 + z * i2);
}

const std::vector<FormulaInfo>& formula_table() {
  static const std::vector<FormulaInfo> table = [] {
    std::vector<FormulaInfo> t;
    double r2 = std::sqrt(2.0);
    double cbrt_r2m1 = std::cbrt(r2 - 1);

    t.push_back({"c7", 4, c7_eval, 0.102124,
                 {0.117446, 0.159343, 0.146896, 0.152629}, std::nullopt, false});
    t.push_back({"c9", 1, [](std::span<const double> v) { return c9_eval(v[0]); }, 0.423570,
                 {0.37346}, 4 - 6 / cbrt_r2m1 + 6 * cbrt_r2m1, false});
    t.push_back({"c15", 1, [](std::span<const double> v) { return c15_eval(v[0]); }, 0.189000,
                 {0.25202}, 9 * (r2 - 2) + 6 * std::sqrt(2 * (r2 - 1)), false});
    t.push_back({"c18", 1, [](std::span<const double> v) { return c15_eval(v[0]); }, 0.189000,
                 {0.25202}, 9 * (r2 - 2) + 6 * std::sqrt(2 * (r2 - 1)), false});
    t.push_back({"c19", 1, [](std::span<const double> v) { return c19_eval(v[0]); }, 0.317678,
                 {0.37346},
                 1.5 * (2 - 3 / cbrt_r2m1 + 3 * cbrt_r2m1), false});
    t.push_back({"c20", 10,
                 [](std::span<const double> v) {
                   return c20_objective(v[0], v[1], v.subspan(2));
                 },
                 0.119537, {}, std::nullopt, true});
    t.push_back({"c21", 1, [](std::span<const double> v) { return c21_eval(v[0]); }, 0.227173,
                 {(9 + std::sqrt(3.0)) / 26}, (28 + 6 * std::sqrt(3.0)) / 169, false});
    t.push_back({"c22", 2,
                 [](std::span<const double> v) { return c22_eval(v[0], v[1]); }, 0.244053,
                 {}, std::nullopt, false});
    double s7690 = std::sqrt(7690.0);
    t.push_back({"c23", 1, [](std::span<const double> v) { return c23_eval(v[0]); }, 0.177630,
                 {0.24063},
                 4.0 / 105 *
                     (std::pow(61.0, 2.0 / 3) * std::cbrt(s7690 - 63) -
                      std::pow(61.0, 2.0 / 3) * std::cbrt(63 + s7690) + 42),
                 false});
    t.push_back({"c26", 10,
                 [](std::span<const double> v) {
                   return c26_objective(v[0], v[1], v.subspan(2));
                 },
                 0.112567, {}, std::nullopt, true});
    t.push_back({"c28", 1, [](std::span<const double> v) { return c28_eval(v[0]); }, 0.157501,
                 {0.85642},
                 (8 - std::pow(3.0, 7.0 / 3) + std::pow(3.0, 5.0 / 3)) / 8, false});

    // rational-constant rows, kept in the table for the CSV export
    struct ConstRow { const char* name; double v; };
    for (auto [name, v] : {ConstRow{"row1", 1.0}, {"row2", 72.0 / 125}, {"row3", 3.0 / 8},
                           {"row5", 64.0 / 315}, {"row6", 6.0 / 31}, {"row8", 81.0 / 512},
                           {"row10", 81.0 / 400}, {"row11", 1.0 / 8}, {"row12", 0.5},
                           {"row13", 2.0 / 21}, {"row14", 3.0 / 16}, {"row16", 3.0 / 8},
                           {"row17", 2.0 / 21}, {"row24", 3.0 / 8}, {"row25", 4.0 / 9},
                           {"row27", 4.0 / 27}, {"row29", 0.5}, {"row30", 1.0}}) {
      double val = v;
      t.push_back({name, 0, [val](std::span<const double>) { return val; }, val, {}, val,
                   false});
    }
    return t;
  }();
  return table;
}

const FormulaInfo& formula(const std::string& name) {
  for (const auto& f : formula_table())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown formula: " + name);
}

double formula_eval(const std::string& name, std::span<const double> params) {
  const auto& f = formula(name);
  if (int(params.size()) != f.arity)
    throw std::invalid_argument("formula " + name + " expects " + std::to_string(f.arity) +
                                " parameters");
  return f.eval(params);
}

std::string formula_table_csv() {
  std::ostringstream os;
  os << "name,arity,paper_value,closed_form,one_sided\n";
  for (const auto& f : formula_table()) {
    os << f.name << ',' << f.arity << ',' << f.paper_value << ',';
    if (f.closed_form) os << *f.closed_form;
    os << ',' << (f.one_sided ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace ind4
