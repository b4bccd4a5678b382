#include "flatpark/series.hpp"

#include "flatpark/recursions.hpp"
#include "flatpark/sequences.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace flatpark {

BivariateSeries::BivariateSeries(int k_max, int n_max) : k_max_(k_max), n_max_(n_max) {
  if (k_max < 0 || n_max < 0) throw ArgumentError("series truncation must be nonnegative");
  c_.assign(static_cast<std::size_t>(k_max + 1) * static_cast<std::size_t>(n_max + 1), Rational(0));
}

BivariateSeries BivariateSeries::one(int k_max, int n_max) {
  BivariateSeries s(k_max, n_max);
  s.set(0, 0, 1);
  return s;
}

BivariateSeries BivariateSeries::x(int k_max, int n_max) {
  BivariateSeries s(k_max, n_max);
  if (k_max >= 1) s.set(1, 0, 1);
  return s;
}

BivariateSeries BivariateSeries::y(int k_max, int n_max) {
  BivariateSeries s(k_max, n_max);
  if (n_max >= 1) s.set(0, 1, 1);
  return s;
}

std::size_t BivariateSeries::index(int k, int n) const {
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_max_ + 1) + static_cast<std::size_t>(n);
}

Rational BivariateSeries::coeff(int k, int n) const {
  if (k < 0 || n < 0 || k > k_max_ || n > n_max_) return 0;
  return c_[index(k, n)];
}

void BivariateSeries::set(int k, int n, const Rational& value) {
  if (k < 0 || n < 0 || k > k_max_ || n > n_max_) {
    throw ArgumentError("coefficient (" + std::to_string(k) + ", " + std::to_string(n) + ") outside truncation");
  }
  c_[index(k, n)] = value;
}

void BivariateSeries::check_shape(const BivariateSeries& o) const {
  if (k_max_ != o.k_max_ || n_max_ != o.n_max_) throw ArgumentError("series truncations differ");
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  check_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  check_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  a.check_shape(b);
  BivariateSeries out(a.k_max_, a.n_max_);
  for (int k1 = 0; k1 <= a.k_max_; ++k1) {
    for (int n1 = 0; n1 <= a.n_max_; ++n1) {
      const Rational& u = a.c_[a.index(k1, n1)];
      if (u == 0) continue;
      for (int k2 = 0; k1 + k2 <= a.k_max_; ++k2) {
        for (int n2 = 0; n1 + n2 <= a.n_max_; ++n2) {
          const Rational& v = b.c_[b.index(k2, n2)];
          if (v != 0) out.c_[out.index(k1 + k2, n1 + n2)] += u * v;
        }
      }
    }
  }
  return out;
}

BivariateSeries series_exp(const BivariateSeries& s) {
  if (s.coeff(0, 0) != 0) throw ArgumentError("series_exp needs a zero constant term");
  // s^j has total degree >= j, so the sum stops at j = k_max + n_max.
  BivariateSeries out = BivariateSeries::one(s.k_max(), s.n_max());
  BivariateSeries term = out;
  for (int j = 1; j <= s.k_max() + s.n_max(); ++j) {
    term = term * s;
    term *= Rational(1, j);
    out += term;
  }
  return out;
}

BivariateSeries claimed_closed_form(int k_max, int n_max) {
  const auto x = BivariateSeries::x(k_max, n_max);
  const auto y = BivariateSeries::y(k_max, n_max);
  BivariateSeries ey_minus_1(k_max, n_max);
  for (int n = 1; n <= n_max; ++n) ey_minus_1.set(0, n, Rational(1) / Rational(factorial(n)));
  const auto inner = x * ey_minus_1 + y - x * y;
  return x * series_exp(inner);
}

std::size_t GfComparison::mismatches() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const GfCell& c) { return !c.equal; }));
}

std::string GfComparison::verdict() const {
  const auto bad = mismatches();
  std::ostringstream out;
  if (bad == 0) {
    out << "closed form agrees on all " << cells.size() << " cells (k <= " << k_max << ", n <= " << n_max << ")";
    return out.str();
  }
  const auto first = std::find_if(cells.begin(), cells.end(), [](const GfCell& c) { return !c.equal; });
  out << "closed form disagrees on " << bad << " of " << cells.size() << " cells; first at k = " << first->k
      << ", n = " << first->n << ": claimed " << first->claimed << ", actual " << first->actual;
  return out.str();
}

GfComparison compare_gf(int n_max, int k_max) {
  if (n_max < 0 || k_max < 1) throw ArgumentError("compare_gf needs n_max >= 0 and k_max >= 1");
  GfComparison cmp{.n_max = n_max, .k_max = k_max};
  const auto claimed = claimed_closed_form(k_max, n_max);
  for (int k = 1; k <= k_max; ++k) {
    for (int n = 0; n <= n_max; ++n) {
      GfCell cell{.k = k, .n = n, .claimed = claimed.coeff(k, n)};
      if (k <= n + 1) cell.actual = Rational(f_flat(n + 1, k, FlatMethod::brute)) / Rational(factorial(n));
      cell.equal = cell.claimed == cell.actual;
      cmp.cells.push_back(std::move(cell));
    }
  }
  return cmp;
}

void write_text(std::ostream& out, const GfComparison& cmp) {
  std::vector<std::vector<std::string>> rows;
  std::size_t width = 1;
  for (const auto& c : cmp.cells) {
    std::ostringstream s;
    s << c.claimed;
    if (!c.equal) s << "|" << c.actual;
    width = std::max(width, s.str().size());
    if (c.n == 0) rows.emplace_back();
    rows.back().push_back(s.str());
  }
  out << "claimed coefficient of x^k y^n; a|b marks claimed a against actual b\n";
  out << std::setw(4) << "k\\n";
  for (int n = 0; n <= cmp.n_max; ++n) out << ' ' << std::setw(static_cast<int>(width)) << n;
  out << '\n';
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out << std::setw(4) << k + 1;
    for (const auto& cell : rows[k]) out << ' ' << std::setw(static_cast<int>(width)) << cell;
    out << '\n';
  }
  out << "verdict: " << cmp.verdict() << '\n';
}

nlohmann::ordered_json to_json(const GfComparison& cmp) {
  nlohmann::ordered_json j;
  j["n_max"] = cmp.n_max;
  j["k_max"] = cmp.k_max;
  auto& cells = j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : cmp.cells) {
    cells.push_back({{"k", c.k},
                     {"n", c.n},
                     {"claimed", c.claimed.str()},
                     {"actual", c.actual.str()},
                     {"equal", c.equal}});
  }
  j["mismatches"] = cmp.mismatches();
  j["verdict"] = cmp.verdict();
  return j;
}

}  // namespace flatpark
