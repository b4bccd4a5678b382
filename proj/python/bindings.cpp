#include "flatpark/bijections.hpp"
#include "flatpark/enumeration.hpp"
#include "flatpark/export.hpp"
#include "flatpark/recursions.hpp"
#include "flatpark/sequences.hpp"
#include "flatpark/series.hpp"
#include "flatpark/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace flatpark;

namespace {

py::int_ to_py(const Count& c) {
  const std::string digits = c.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object to_py(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list to_py(const std::vector<Count>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

FamilySpec spec(const std::string& family, int n, const std::string& S, std::optional<int> k, std::optional<int> r) {
  FamilySpec s{.family = parse_family(family), .n = n, .k = k, .r = r};
  if (!S.empty()) s.insert = InsertMultiset::parse(S);
  return s;
}

template <class Method>
Method parse_method(const std::string& name, std::initializer_list<Method> methods) {
  for (const auto m : methods) {
    if (method_name(m) == name) return m;
  }
  throw ArgumentError("unknown method '" + name + "'");
}

FlatMethod flat_method(const std::string& name) {
  using M = FlatMethod;
  return parse_method(name, {M::brute, M::flat_perm_sum, M::flat_perm_two_term, M::flat_perm_third});
}

OnesMethod ones_method(const std::string& name) {
  using M = OnesMethod;
  return parse_method(name, {M::brute, M::ones_eq1, M::ones_two_term, M::ones_bell_form, M::r_ones_eq2,
                             M::r_ones_eq2_amended, M::r_ones_two_term, M::r_ones_peel_statement,
                             M::r_ones_peel_proof});
}

EnumerationOptions options(unsigned jobs) {
  auto opts = EnumerationOptions::from_environment();
  opts.jobs = jobs;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Flattened parking functions: enumeration, exact counts and bijection checks";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def(
      "enumerate",
      [](const std::string& family, int n, const std::string& S, std::optional<int> k, std::optional<int> r,
         unsigned jobs) {
        const auto s = spec(family, n, S, k, r);
        std::vector<std::string> out;
        if (is_word_family(s.family)) {
          for (const auto& w : gen_words(s, options(jobs))) out.push_back(w.str());
        } else {
          for (const auto& p : gen_partitions(s, options(jobs))) out.push_back(p.str());
        }
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("S") = "", py::arg("k") = py::none(), py::arg("r") = py::none(),
      py::arg("jobs") = 1, "Members of a family in lexicographic order, as strings.");

  m.def(
      "count",
      [](const std::string& family, int n, const std::string& S, std::optional<int> k, std::optional<int> r,
         unsigned jobs) { return to_py(count_family(spec(family, n, S, k, r), options(jobs))); },
      py::arg("family"), py::arg("n"), py::arg("S") = "", py::arg("k") = py::none(), py::arg("r") = py::none(),
      py::arg("jobs") = 1, "Number of members of a family.");

  m.def(
      "histogram",
      [](const std::string& family, int n, const std::string& S, std::optional<int> r, unsigned jobs) {
        return to_py(statistic_histogram(spec(family, n, S, std::nullopt, r), options(jobs)));
      },
      py::arg("family"), py::arg("n"), py::arg("S") = "", py::arg("r") = py::none(), py::arg("jobs") = 1,
      "Counts indexed by run count (words) or by blocks of size >= 2 (partitions).");

  m.def(
      "f_flat", [](int n, int k, const std::string& method) { return to_py(f_flat(n, k, flat_method(method))); },
      py::arg("n"), py::arg("k"), py::arg("method") = "brute");
  m.def(
      "f_ones",
      [](int r, int n, int k, const std::string& method) { return to_py(f_ones(r, n, k, ones_method(method))); },
      py::arg("r"), py::arg("n"), py::arg("k"), py::arg("method") = "brute");
  m.def(
      "f_separated",
      [](int s, int r, int m_, int k, const std::string& mode, bool brute) {
        return to_py(f_separated(s, r, m_, k, parse_separation(mode),
                                 brute ? SeparatedMethod::brute : SeparatedMethod::recursion));
      },
      py::arg("s"), py::arg("r"), py::arg("m"), py::arg("k"), py::arg("mode"), py::arg("brute") = false);
  m.def("flat2_single_insert", [](int n) { return to_py(flat2_single_insert(n)); }, py::arg("n"));
  m.def("hook_sum", [](int m_) { return to_py(hook_sum(m_)); }, py::arg("m"));

  m.def("catalan", [](int n) { return to_py(catalan(n)); }, py::arg("n"));
  m.def("bell", [](int n) { return to_py(bell(n)); }, py::arg("n"));
  m.def("r_bell", [](int n, int r) { return to_py(r_bell(n, r)); }, py::arg("n"), py::arg("r"));
  m.def("count_T", [](int n, int k) { return to_py(count_T(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("count_Bkr", [](int n, int r, int k) { return to_py(count_Bkr(n, r, k)); }, py::arg("n"), py::arg("r"),
        py::arg("k"));

  m.def("run_count", [](const std::string& w) { return run_count(Word::parse(w)); }, py::arg("word"));
  m.def("is_flattened", [](const std::string& w) { return is_flattened(Word::parse(w)); }, py::arg("word"));
  m.def(
      "is_parking_function",
      [](const std::string& w) {
        const auto word = Word::parse(w);
        return is_parking_function(word, word.size());
      },
      py::arg("word"));

  m.def("partition_to_flat", [](const std::string& p) { return partition_to_flat(SetPartition::parse(p)).str(); },
        py::arg("partition"));
  m.def("flat_to_partition", [](const std::string& w) { return flat_to_partition(Word::parse(w)).str(); },
        py::arg("word"));
  m.def(
      "rpartition_to_flat",
      [](const std::string& p, int r) { return rpartition_to_flat(SetPartition::parse(p), r).str(); },
      py::arg("partition"), py::arg("r"));
  m.def(
      "flat_to_rpartition", [](const std::string& w, int r) { return flat_to_rpartition(Word::parse(w), r).str(); },
      py::arg("word"), py::arg("r"));

  m.def(
      "verify_bijection",
      [](const std::string& name, int n, const std::string& S, int l, int r, unsigned jobs) {
        const auto id = parse_bijection(name);
        if (!id) throw ArgumentError("unknown bijection '" + name + "'");
        const BijectionParams params{.n = n, .S = InsertMultiset::parse(S), .l = l, .r = r};
        return to_py(to_json(verify_bijection(*id, params, options(jobs))));
      },
      py::arg("name"), py::arg("n"), py::arg("S") = "", py::arg("l") = 2, py::arg("r") = 1, py::arg("jobs") = 1,
      "Exhaustive bijection check on one domain; returns the report as a dict.");

  m.def(
      "verify",
      [](const std::string& id, int n_max, int r_max, int k_max, int size_max, unsigned jobs) {
        const SweepRange range{.n_max = n_max, .r_max = r_max, .k_max = k_max, .size_max = size_max};
        RecursionEngine engine(options(jobs));
        return to_py(to_json(verify_theorem(id, range, options(jobs), engine)));
      },
      py::arg("id"), py::arg("n_max") = 0, py::arg("r_max") = 0, py::arg("k_max") = 0, py::arg("size_max") = 0,
      py::arg("jobs") = 1, "Brute-force sweep of one theorem id; zero bounds use the defaults.");
  m.def("verifiable_ids", &verifiable_ids);

  m.def(
      "table1",
      [](int n_max, unsigned jobs) {
        py::list rows;
        for (const auto& row : table1(n_max, options(jobs))) {
          py::dict d;
          d["n"] = row.n;
          d["total"] = to_py(row.total);
          d["by_k"] = to_py(row.by_k);
          rows.append(d);
        }
        return rows;
      },
      py::arg("n_max") = 8, py::arg("jobs") = 1);

  m.def(
      "compare_gf", [](int n_max, int k_max) { return to_py(to_json(compare_gf(n_max, k_max))); },
      py::arg("n_max") = 7, py::arg("k_max") = 4, "Closed generating function against brute force, per cell.");

  m.attr("__all__") = py::make_tuple(
      "ResourceError", "enumerate", "count", "histogram", "f_flat", "f_ones", "f_separated", "flat2_single_insert",
      "hook_sum", "catalan", "bell", "r_bell", "count_T", "count_Bkr", "run_count", "is_flattened",
      "is_parking_function", "partition_to_flat", "flat_to_partition", "rpartition_to_flat", "flat_to_rpartition",
      "verify_bijection", "verify", "verifiable_ids", "table1", "compare_gf");
}
