#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace colnum {

// Non-negative rational in lowest terms, for edge densities.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    auto g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  // comparisons against integers, used for density-vs-parameter bounds
  friend bool operator<=(const Rational& a, std::int64_t k) { return a.num <= k * a.den; }
  friend bool operator>=(const Rational& a, std::int64_t k) { return a.num >= k * a.den; }
};

}  // namespace colnum
