#include "flatpark/export.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace flatpark {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ArgumentError("unknown format '" + std::string(name) + "' (text, csv, json)");
}

void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  }
}

namespace {

void write_csv_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i > 0 ? "," : "") << row[i];
    out << '\n';
  }
}

Count at(const std::vector<Count>& v, std::size_t i) { return i < v.size() ? v[i] : Count(0); }

}  // namespace

std::vector<Table1Row> table1(int n_max, const EnumerationOptions& opts) {
  if (n_max < 1) throw ArgumentError("table1 needs n_max >= 1");
  const int columns = std::max(4, (n_max + 1) / 2);
  for (int n = 1; n <= n_max; ++n) validate({.family = Family::flat_pf, .n = n}, opts);
  std::vector<Table1Row> rows;
  for (int n = 1; n <= n_max; ++n) {
    const auto hist = statistic_histogram({.family = Family::flat_pf, .n = n}, opts);
    Table1Row row{.n = n};
    for (const auto& c : hist) row.total += c;
    for (int k = 1; k <= columns; ++k) row.by_k.push_back(at(hist, static_cast<std::size_t>(k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, Format format) {
  const std::size_t columns = rows.empty() ? 0 : rows.front().by_k.size();
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["table"] = "flattened parking functions by runs";
    auto& by_n = j["n"] = nlohmann::ordered_json::object();
    for (const auto& row : rows) {
      nlohmann::ordered_json cell;
      cell["total"] = json_count(row.total);
      auto& k = cell["k"] = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.by_k.size(); ++i) k[std::to_string(i + 1)] = json_count(row.by_k[i]);
      by_n[std::to_string(row.n)] = std::move(cell);
    }
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"n", "total"};
  for (std::size_t i = 1; i <= columns; ++i) header.push_back(format == Format::csv ? "k" + std::to_string(i) : "k=" + std::to_string(i));
  table.push_back(std::move(header));
  for (const auto& row : rows) {
    std::vector<std::string> line{std::to_string(row.n), to_string(row.total)};
    for (const auto& c : row.by_k) line.push_back(to_string(c));
    table.push_back(std::move(line));
  }
  if (format == Format::csv) {
    write_csv_rows(out, table);
  } else {
    write_aligned(out, table);
  }
}

std::vector<Table2Block> table2(int n_max, const std::vector<int>& r_set, const EnumerationOptions& opts) {
  if (n_max < 1) throw ArgumentError("table2 needs n_max >= 1");
  for (int r : r_set) {
    if (r < 1) throw ArgumentError("table2 needs r >= 1");
    validate({.family = Family::flat_s_insertion, .n = n_max, .insert = InsertMultiset::ones(r)}, opts);
  }
  std::vector<Table2Block> blocks;
  for (int r : r_set) {
    Table2Block block{.r = r, .n_max = n_max};
    for (int n = 1; n <= n_max; ++n) {
      const auto parts =
          statistic_histogram({.family = Family::restricted_set_partitions, .n = n - 1, .r = r}, opts);
      const auto words =
          statistic_histogram({.family = Family::flat_s_insertion, .n = n, .insert = InsertMultiset::ones(r)}, opts);
      std::vector<Count> prow, wrow;
      for (int k = 1; k <= n_max; ++k) {
        prow.push_back(at(parts, static_cast<std::size_t>(k - 1)));
        wrow.push_back(at(words, static_cast<std::size_t>(k)));
      }
      block.partitions.push_back(std::move(prow));
      block.words.push_back(std::move(wrow));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void write_table2(std::ostream& out, const std::vector<Table2Block>& blocks, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["table"] = "(r,k)-Bell numbers; row n, column k is B_{k-1}(n-1, r)";
    auto& by_r = j["r"] = nlohmann::ordered_json::object();
    for (const auto& b : blocks) {
      nlohmann::ordered_json block;
      block["agree"] = b.agree();
      auto& by_n = block["n"] = nlohmann::ordered_json::object();
      for (int n = 1; n <= b.n_max; ++n) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (int k = 1; k <= b.n_max; ++k) {
          nlohmann::ordered_json cell;
          cell["partitions"] = json_count(b.partitions[n - 1][k - 1]);
          cell["words"] = json_count(b.words[n - 1][k - 1]);
          row[std::to_string(k)] = std::move(cell);
        }
        by_n[std::to_string(n)] = std::move(row);
      }
      by_r[std::to_string(b.r)] = std::move(block);
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "r,n,k,partitions,words\n";
    for (const auto& b : blocks) {
      for (int n = 1; n <= b.n_max; ++n) {
        for (int k = 1; k <= b.n_max; ++k) {
          out << b.r << ',' << n << ',' << k << ',' << b.partitions[n - 1][k - 1] << ',' << b.words[n - 1][k - 1]
              << '\n';
        }
      }
    }
    return;
  }
  out << "row n, column k: partitions of [n-1+r] with 1..r apart and k-1 blocks of size >= 2,\n"
         "checked against flattened words in flat_k(PF_n(1_r)); a|b marks a disagreement\n";
  for (const auto& b : blocks) {
    out << "\nr = " << b.r << '\n';
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"n\\k"};
    for (int k = 1; k <= b.n_max; ++k) header.push_back(std::to_string(k));
    table.push_back(std::move(header));
    for (int n = 1; n <= b.n_max; ++n) {
      std::vector<std::string> line{std::to_string(n)};
      for (int k = 1; k <= b.n_max; ++k) {
        const auto& p = b.partitions[n - 1][k - 1];
        const auto& w = b.words[n - 1][k - 1];
        line.push_back(p == w ? to_string(p) : to_string(p) + "|" + to_string(w));
      }
      table.push_back(std::move(line));
    }
    write_aligned(out, table);
    out << (b.agree() ? "both counts agree\n" : "DISAGREEMENT between partitions and words\n");
  }
}

void write_histogram(std::ostream& out, const FamilySpec& spec, const std::vector<Count>& hist, Format format) {
  const bool words = is_word_family(spec.family);
  const std::string stat = words ? "runs" : "big_blocks";
  Count total = 0;
  for (const auto& c : hist) total += c;
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    if (spec.insert) j["S"] = spec.insert->str();
    if (spec.r) j["r"] = *spec.r;
    j["total"] = json_count(total);
    auto& by = j[stat] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < hist.size(); ++i) {
      if (hist[i] != 0) by[std::to_string(i)] = json_count(hist[i]);
    }
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> table{{stat, "count"}};
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i] != 0) table.push_back({std::to_string(i), to_string(hist[i])});
  }
  table.push_back({"total", to_string(total)});
  if (format == Format::csv) {
    write_csv_rows(out, table);
  } else {
    write_aligned(out, table);
  }
}

}  // namespace flatpark
