#pragma once

#include "flatpark/common.hpp"
#include "flatpark/enumeration.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string_view>
#include <vector>

namespace flatpark {

enum class Format { text, csv, json };
Format parse_format(std::string_view name);

/// A count as a JSON integer when it fits in 64 bits, as a decimal string otherwise.
inline nlohmann::ordered_json json_count(const Count& c) {
  if (c >= Count(std::numeric_limits<std::int64_t>::min()) && c <= Count(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(c);
  }
  return to_string(c);
}

/// Flattened parking functions of length n: total and by run count.
struct Table1Row {
  int n = 0;
  Count total;
  std::vector<Count> by_k;  // by_k[i] counts k = i + 1
};

/// Rows n = 1..n_max with at least four run columns, more when ceil(n_max/2) > 4.
std::vector<Table1Row> table1(int n_max, const EnumerationOptions& opts = {});
void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, Format format);

/// One (r,k)-Bell block in the published layout: row n, column k holds
/// B_{k-1}(n-1, r), counted once over partitions of [n-1+r] and once over
/// the words flat_k(PF_n(1_r)).
struct Table2Block {
  int r = 0;
  int n_max = 0;
  std::vector<std::vector<Count>> partitions;  // [n-1][k-1]
  std::vector<std::vector<Count>> words;
  bool agree() const { return partitions == words; }
};

std::vector<Table2Block> table2(int n_max, const std::vector<int>& r_set, const EnumerationOptions& opts = {});
void write_table2(std::ostream& out, const std::vector<Table2Block>& blocks, Format format);

/// Member count of a family, split by run count (words) or large blocks (partitions).
void write_histogram(std::ostream& out, const FamilySpec& spec, const std::vector<Count>& hist, Format format);

/// Pads each column to its widest cell; the first row is the header.
void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows);

}  // namespace flatpark
