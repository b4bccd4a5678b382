#pragma once

#include "flatpark/common.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace flatpark {

using Rational = boost::multiprecision::cpp_rational;

/// Power series in x and y truncated at x^k_max y^n_max, with exact rational
/// coefficients. Products drop every term past the truncation.
class BivariateSeries {
 public:
  BivariateSeries(int k_max, int n_max);

  static BivariateSeries one(int k_max, int n_max);
  static BivariateSeries x(int k_max, int n_max);
  static BivariateSeries y(int k_max, int n_max);

  int k_max() const noexcept { return k_max_; }
  int n_max() const noexcept { return n_max_; }

  /// Coefficient of x^k y^n; zero outside the truncation.
  Rational coeff(int k, int n) const;
  void set(int k, int n, const Rational& value);

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  BivariateSeries& operator*=(const Rational& c);

  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(BivariateSeries a, const Rational& c) { return a *= c; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  void check_shape(const BivariateSeries& o) const;
  std::size_t index(int k, int n) const;

  int k_max_;
  int n_max_;
  std::vector<Rational> c_;
};

/// exp(s) to the truncation. s must have a zero constant term.
BivariateSeries series_exp(const BivariateSeries& s);

/// x exp(x(e^y - 1) + y(1 - x)) to the truncation.
BivariateSeries claimed_closed_form(int k_max, int n_max);

struct GfCell {
  int k = 0;
  int n = 0;
  Rational claimed;
  Rational actual;  // f_{n+1,k} / n!
  bool equal = false;
};

struct GfComparison {
  int n_max = 0;
  int k_max = 0;
  std::vector<GfCell> cells;  // k = 1..k_max, then n = 0..n_max

  std::size_t mismatches() const;
  std::string verdict() const;
};

/// Cell-by-cell comparison of claimed_closed_form against sum f_{n+1,k} x^k y^n / n!,
/// with f_{n+1,k} from brute force.
GfComparison compare_gf(int n_max, int k_max);

void write_text(std::ostream& out, const GfComparison& cmp);
nlohmann::ordered_json to_json(const GfComparison& cmp);

}  // namespace flatpark
