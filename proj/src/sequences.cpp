#include "flatpark/sequences.hpp"

#include "flatpark/enumeration.hpp"

#include <numeric>
#include <ostream>

namespace flatpark {

Count factorial(int n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  Count out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Count multinomial(int n, std::span<const int> parts) {
  Count out = 1;
  int left = n;
  for (int p : parts) {
    if (p < 0 || p > left) return 0;
    out *= binomial(left, p);
    left -= p;
  }
  return out;
}

Count catalan(int n) {
  if (n < 0) throw ArgumentError("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

Count bell(int n) {
  if (n < 0) throw ArgumentError("bell needs n >= 0");
  std::vector<Count> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Count> next{row.back()};
    for (const auto& c : row) next.push_back(next.back() + c);
    row = std::move(next);
  }
  return row.front();
}

Count r_bell(int n, int r) {
  if (n < 0 || r < 1) throw ArgumentError("r_bell needs n >= 0 and r >= 1");
  Count total = 0;
  for (const auto& c : statistic_histogram(
           {.family = Family::restricted_set_partitions, .n = n, .r = r})) {
    total += c;
  }
  return total;
}

Count eulerian_one_descent(int n) {
  if (n < 1) throw ArgumentError("eulerian_one_descent needs n >= 1");
  Count p = 1;
  p <<= n;
  return p - n - 1;
}

void write_bfile(std::ostream& out, const SequenceTable& table) {
  for (const auto& [index, value] : table.values) {
    if (index.size() != 1) throw ArgumentError("b-file export needs a one-index table");
    out << index.front() << ' ' << value << '\n';
  }
}

void write_csv(std::ostream& out, const SequenceTable& table) {
  for (const auto& name : table.index_names) out << name << ',';
  out << "value\n";
  for (const auto& [index, value] : table.values) {
    for (int i : index) out << i << ',';
    out << value << '\n';
  }
}

}  // namespace flatpark
