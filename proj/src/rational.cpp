#include "fracrank/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace fracrank {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

std::string format_rat(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  Int num = Int(std::ldexp(m, 53));
  exp -= 53;
  Rat r(num);
  if (exp > 0)
    r *= rat_pow(Rat(2), exp);
  else if (exp < 0)
    r /= rat_pow(Rat(2), -exp);
  return r;
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1), b = base;
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  if (inv) {
    if (acc == 0) throw std::domain_error("zero base with negative exponent");
    acc = Rat(1) / acc;
  }
  return acc;
}

Int rat_floor(const Rat& a) {
  Int q = numerator(a) / denominator(a);
  // cpp_int division truncates toward zero; fix up negatives.
  if (a < 0 && q * denominator(a) != numerator(a)) --q;
  return q;
}

Int min_int_sqrt_scale(const Rat& q, const Rat& target) {
  if (q <= 0) throw std::domain_error("min_int_sqrt_scale: q must be positive");
  Int s = 1;
  if (target <= 0) return s;
  // Start from the double estimate, then correct exactly.
  double est = std::sqrt(rat_to_double(target / q));
  if (est > 1.0) s = Int(static_cast<long long>(est));
  if (s < 1) s = 1;
  while (Rat(s * s) * q >= target && s > 1) --s;
  while (Rat(s * s) * q < target) ++s;
  return s;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat r(0);
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Rat norm2(const QVec& a) { return dot(a, a); }

}  // namespace fracrank
