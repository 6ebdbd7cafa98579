#include "ind4/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace ind4 {

Rat parse_rat(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + std::string(s));
  }
}

std::string format_rat(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat rat_from_double(double x, std::int64_t max_den) {
  if (max_den < 1) throw std::invalid_argument("rat_from_double: max_den >= 1 required");
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite input");
  bool neg = x < 0;
  double v = std::fabs(x);

  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double ip = std::floor(frac);
    if (ip > 9e17) break;
    std::int64_t a = std::int64_t(ip);
    std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) {
      // try the largest semiconvergent still within the cap
      if (q1 > 0) {
        std::int64_t k = (max_den - q0) / q1;
        std::int64_t ps = k * p1 + p0, qs = k * q1 + q0;
        if (k > 0 && qs >= 1) {
          double dsemi = std::fabs(double(ps) / double(qs) - v);
          double dconv = std::fabs(double(p1) / double(q1) - v);
          if (dsemi < dconv) {
            Rat semi(ps, qs);
            return neg ? -semi : semi;
          }
        }
      }
      break;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - ip;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat best(p1, q1);
  return neg ? -best : best;
}

}  // namespace ind4
