#pragma once

// Exact average precision by enumerating the precision/recall points in
// rational arithmetic.

#include <cstdint>
#include <numeric>
#include <vector>

namespace support {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction(std::int64_t n = 0, std::int64_t d = 1) : num(n), den(d) {
    const auto g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Fraction operator+(const Fraction &o) const { return {num * o.den + o.num * den, den * o.den}; }
  Fraction operator*(const Fraction &o) const { return {num * o.num, den * o.den}; }
  bool operator<(const Fraction &o) const { return num * o.den < o.num * den; }
  double value() const { return double(num) / double(den); }
};

// All-point AP: each true positive adds 1/G of recall at the best precision
// reached at or beyond its rank.
inline Fraction ap_oracle(const std::vector<bool> &tp, std::int64_t n_gt) {
  const auto n = static_cast<std::int64_t>(tp.size());
  std::vector<Fraction> prec(tp.size());
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    hits += tp[i];
    prec[i] = Fraction(hits, i + 1);
  }
  Fraction sum;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!tp[i])
      continue;
    Fraction best = prec[i];
    for (std::int64_t j = i + 1; j < n; ++j)
      if (best < prec[j])
        best = prec[j];
    sum = sum + best * Fraction(1, n_gt);
  }
  return sum;
}

// Eleven-point AP: mean over recall levels 0, 0.1, ..., 1 of the best
// precision at recall >= level.
inline double eleven_point_oracle(const std::vector<bool> &tp, std::int64_t n_gt) {
  double sum = 0;
  for (int k = 0; k <= 10; ++k) {
    Fraction best;
    std::int64_t hits = 0;
    for (std::size_t i = 0; i < tp.size(); ++i) {
      hits += tp[i];
      // recall >= k/10  <=>  10 * hits >= k * G
      if (10 * hits >= k * n_gt && best < Fraction(hits, std::int64_t(i) + 1))
        best = Fraction(hits, std::int64_t(i) + 1);
    }
    sum += best.value();
  }
  return sum / 11.0;
}

} // namespace support
