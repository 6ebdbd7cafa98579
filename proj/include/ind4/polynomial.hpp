#pragma once

#include <cstddef>
#include <vector>

namespace ind4 {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// T is Rat for the exact evaluators and double for the optimizers.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly one() { return constant(T(1)); }

  bool is_zero() const { return c.empty(); }
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }

  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), T(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
  }

  Poly operator-(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), T(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, T(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }

  /// Antiderivative with F(0) = 0.
  Poly antiderivative() const {
    Poly r;
    r.c.assign(c.size() + 1, T(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + 1] = c[i] / T(int(i) + 1);
    r.trim();
    return r;
  }

  T integrate(const T& a, const T& b) const {
    Poly F = antiderivative();
    return F.eval(b) - F.eval(a);
  }
};

}  // namespace ind4
