#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lambdakit/lambdakit.hpp"

namespace py = pybind11;
using namespace lambdakit;

namespace pybind11::detail {

// Count <-> Python int through the decimal representation.
template <>
struct type_caster<Count> {
  PYBIND11_TYPE_CASTER(Count, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const std::string digits = py::str(src).cast<std::string>();
    if (digits.empty() || digits.front() == '-') return false;
    value = Count(digits);
    return true;
  }

  static handle cast(const Count& value, return_value_policy, handle) {
    return PyLong_FromString(lambdakit::to_string(value).c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

MatrixFormat parse_format(const std::string& name) {
  if (name == "plain") return MatrixFormat::kPlain;
  if (name == "jsonl") return MatrixFormat::kJsonlRecord;
  throw py::value_error("format must be 'plain' or 'jsonl'");
}

py::dict counts_dict(const ClassCounts& c) {
  py::dict d;
  d["alpha"] = c.alpha;
  d["beta"] = c.beta;
  d["gamma"] = c.gamma;
  d["delta"] = c.delta;
  d["epsilon"] = c.epsilon;
  d["zeta"] = c.zeta;
  d["eta"] = c.eta;
  return d;
}

std::vector<std::string> row_strings(const BinaryMatrix& a) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < a.n(); ++i) {
    std::string row(a.n(), '0');
    for (std::size_t j = 0; j < a.n(); ++j) row[j] = a.at(i, j) ? '1' : '0';
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_lambdakit, m) {
  m.doc() = "Exact counting of square 0/1 matrices with constant line sums.";

  py::register_exception<Error>(m, "LambdaError", PyExc_ValueError);

  py::class_<BinaryMatrix>(m, "BinaryMatrix")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](const std::vector<std::string>& rows) {
             std::string text;
             for (const auto& r : rows) text += r + "\n";
             return parse_matrix(text);
           }),
           py::arg("rows"))
      .def_static("identity", &BinaryMatrix::identity, py::arg("n"))
      .def_static("all_ones", &BinaryMatrix::all_ones, py::arg("n"))
      .def_property_readonly("n", &BinaryMatrix::n)
      .def_property_readonly("rows", &row_strings)
      .def("at", &BinaryMatrix::at, py::arg("i"), py::arg("j"))
      .def("row_sum", &BinaryMatrix::row_sum, py::arg("i"))
      .def("column_sum", &BinaryMatrix::column_sum, py::arg("j"))
      .def("__eq__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a == b; })
      .def("__lt__", [](const BinaryMatrix& a, const BinaryMatrix& b) { return a < b; })
      .def("__hash__", [](const BinaryMatrix& a) {
        return py::hash(py::str(serialize_matrix(a)));
      })
      .def("__str__", [](const BinaryMatrix& a) { return serialize_matrix(a); })
      .def("__repr__", [](const BinaryMatrix& a) {
        return "BinaryMatrix(" + serialize_matrix(a, MatrixFormat::kJsonlRecord) + ")";
      });

  m.def("parse_matrix", &parse_matrix, py::arg("text"));
  m.def("parse_matrix_record", &parse_matrix_record, py::arg("line"));
  m.def(
      "serialize_matrix",
      [](const BinaryMatrix& a, const std::string& format) {
        return serialize_matrix(a, parse_format(format));
      },
      py::arg("a"), py::arg("format") = "plain");
  m.def("is_lambda", &is_lambda, py::arg("a"), py::arg("k"));
  m.def("complement", &complement, py::arg("a"));
  m.def("transpose", &transpose, py::arg("a"));
  m.def(
      "tilde_submatrix",
      [](const BinaryMatrix& x) {
        const TildeSubmatrix t = tilde_submatrix(x);
        py::dict d;
        d["rows"] = py::make_tuple(t.s, t.t);
        d["columns"] = py::make_tuple(t.p, t.q);
        d["entries"] = t.entries;
        return d;
      },
      py::arg("x"));

  m.def(
      "enumerate_lambda",
      [](std::size_t n, std::size_t k, const std::optional<py::function>& visit) -> py::object {
        if (visit) return py::cast(enumerate_lambda(n, k, [&](const BinaryMatrix& a) { (*visit)(a); }));
        py::list out;
        enumerate_lambda(n, k, [&](const BinaryMatrix& a) { out.append(py::cast(a)); });
        return std::move(out);
      },
      py::arg("n"), py::arg("k"), py::arg("visit") = py::none());
  m.def("count_lambda", &count_lambda, py::arg("n"), py::arg("k"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "count_split",
      [](std::size_t n, std::size_t k, unsigned threads) {
        SplitCount s;
        {
          py::gil_scoped_release release;
          s = count_split(n, k, threads);
        }
        return py::make_tuple(s.plus, s.minus);
      },
      py::arg("n"), py::arg("k"), py::arg("threads") = 1);
  m.def(
      "rho_class_stats",
      [](const BinaryMatrix& a, std::size_t k) {
        const RhoClassStats s = rho_class_stats(a, k);
        py::dict d;
        d["j_set"] = s.j_set;
        d["multiplicities"] = s.multiplicities;
        d["class_size"] = s.class_size;
        d["p_plus"] = s.p_plus;
        d["p_minus"] = s.p_minus;
        return d;
      },
      py::arg("a"), py::arg("k"));
  m.def("rho_class_generate", &rho_class_generate, py::arg("a"), py::arg("k"));

  m.def("lambda2_partition_sum", &lambda2_partition_sum, py::arg("n"));
  m.def("lambda2_anand", &lambda2_anand, py::arg("n"));
  m.def("lambda2_good", &lambda2_good, py::arg("n"));
  m.def(
      "lambda2_system",
      [](std::size_t n) {
        const LambdaPi r = lambda2_system(n);
        return py::make_tuple(r.lambda, r.pi);
      },
      py::arg("n"));
  m.def("lambda2_plus", &lambda2_plus, py::arg("n"));
  m.def("lambda_plus_from_total", &lambda_plus_from_total, py::arg("n"), py::arg("k"),
        py::arg("total"));
  m.def("lambda_minus_from_plus", &lambda_minus_from_plus, py::arg("n"), py::arg("k"),
        py::arg("plus"));
  m.def("lambda3_explicit", &lambda3_explicit, py::arg("n"));

  m.def("dp_count", &dp_count, py::arg("n"), py::arg("k"));
  m.def(
      "dp_count_from",
      [](const std::vector<std::size_t>& deficits, std::size_t k) {
        return dp_count_from(profile_from_deficits(deficits, k), k);
      },
      py::arg("deficits"), py::arg("k"));
  m.def("dp_table", &dp_table, py::arg("k"), py::arg("n_max"));

  m.def(
      "classify_plus3", [](const BinaryMatrix& x) { return std::string(to_string(classify_plus3(x))); },
      py::arg("x"));
  m.def(
      "class_counts",
      [](std::size_t n, unsigned threads) {
        ClassCounts c;
        {
          py::gil_scoped_release release;
          c = class_counts(n, threads);
        }
        py::dict d = counts_dict(c);
        d["n"] = n;
        d["lambda_plus"] = c.total();
        return d;
      },
      py::arg("n"), py::arg("threads") = 1);
  m.def(
      "theorem4_check",
      [](std::size_t n, unsigned threads) {
        Theorem4Report r;
        {
          py::gil_scoped_release release;
          r = theorem4_check(n, threads);
        }
        py::dict d;
        d["n"] = r.n;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["holds"] = r.holds;
        d["counts"] = counts_dict(r.counts);
        return d;
      },
      py::arg("n"), py::arg("threads") = 1);
}
