#pragma once

#include "flatpark/common.hpp"

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace flatpark {

Count factorial(int n);
/// Zero outside 0 <= k <= n.
Count binomial(int n, int k);
/// n! / (parts_1! ... parts_t! (n - sum)!). Zero if the parts overflow n.
Count multinomial(int n, std::span<const int> parts);

Count catalan(int n);
/// Bell triangle.
Count bell(int n);
/// Partitions of [n + r] with 1..r in distinct blocks, as the sum of count_Bkr over k.
Count r_bell(int n, int r);
/// Permutations of [n] with exactly one descent, 2^n - n - 1.
Count eulerian_one_descent(int n);

/// A named table of counts over integer index tuples.
struct SequenceTable {
  std::string name;
  std::vector<std::string> index_names;
  std::map<std::vector<int>, Count> values;
};

/// OEIS b-file layout: "index value" per line. Only for one-index tables.
void write_bfile(std::ostream& out, const SequenceTable& table);
/// Header is the index names then "value"; rows in index order.
void write_csv(std::ostream& out, const SequenceTable& table);

}  // namespace flatpark
