#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chipdual/checks.hpp"
#include "chipdual/duality.hpp"
#include "chipdual/errors.hpp"
#include "chipdual/frackets.hpp"
#include "chipdual/io.hpp"
#include "chipdual/reference.hpp"
#include "chipdual/signed_graph.hpp"

namespace py = pybind11;
using namespace chipdual;

namespace {

// Python int <-> Integer and fractions.Fraction <-> Rational go through
// decimal strings, so nothing is truncated.

py::object py_int(const Integer& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object py_fraction(const Rational& x) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(x.get_num()), py_int(x.get_den()));
}

Integer to_integer_value(const py::handle& h) {
  if (py::isinstance<py::bool_>(h) || !py::isinstance<py::int_>(h))
    throw InvalidInput("expected an int, got " + std::string(py::str(py::repr(h))));
  return Integer(std::string(py::str(h)));
}

Rational to_rational_value(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(to_integer_value(h));
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return make_rational(to_integer_value(h.attr("numerator")), to_integer_value(h.attr("denominator")));
  throw InvalidInput("expected an int, Fraction or \"a/b\" string, got " + std::string(py::str(py::repr(h))));
}

IntVector int_vector(const py::iterable& xs) {
  IntVector v;
  for (auto x : xs) v.push_back(to_integer_value(x));
  return v;
}

RatVector rat_vector(const py::iterable& xs) {
  RatVector v;
  for (auto x : xs) v.push_back(to_rational_value(x));
  return v;
}

IntMatrix int_matrix(const py::sequence& rows) {
  std::vector<IntVector> r;
  for (auto row : rows) r.push_back(int_vector(row.cast<py::iterable>()));
  if (r.empty()) throw InvalidInput("empty matrix");
  IntMatrix a(r.size(), r[0].size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].size() != a.cols()) throw InvalidInput("ragged matrix");
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = r[i][j];
  }
  return a;
}

py::tuple py_vec(const IntVector& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = py_int(v[i]);
  return t;
}

py::tuple py_vec(const RatVector& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = py_fraction(v[i]);
  return t;
}

template <class T>
py::list py_matrix(const Matrix<T>& a) {
  py::list rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.append(py::list(py_vec(a.row(i))));
  return rows;
}

py::dict py_config(const PairConfiguration& c) {
  py::dict d;
  d["config"] = py_vec(c.config);
  d["preimage"] = py_vec(c.preimage);
  d["floor"] = py_vec(c.floor);
  d["frac"] = py_vec(c.frac);
  return d;
}

py::list py_group(const AbelianGroup& g) {
  py::list out;
  const auto& f = g.invariant_factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) out.append(py_int(*it));
  return out;
}

Side parse_side(const std::string& s) {
  if (s == "L") return Side::L;
  if (s == "M") return Side::M;
  throw InvalidInput("side must be \"L\" or \"M\"");
}

}  // namespace

PYBIND11_MODULE(_chipdual, m) {
  m.doc() = "Exact chip-firing on (L, M) pairs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", PyExc_ArithmeticError);
  py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", PyExc_RuntimeError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_AssertionError);

  m.def("is_m_matrix", [](const py::sequence& a) { return is_m_matrix(int_matrix(a)); });
  m.def("determinant", [](const py::sequence& a) { return py_int(determinant(int_matrix(a))); });
  m.def("invariant_factors", [](const py::sequence& a) { return py_group(quotient_group(int_matrix(a))); },
        "Invariant factors of Z^n / A Z^n, largest first.");
  m.def("smith_diagonal", [](const py::sequence& a) { return py_vec(smith_normal_form(int_matrix(a)).diagonal()); });

  m.def("superstables", [](const py::sequence& a) {
    const MMatrix mm(int_matrix(a));
    py::list out;
    for (const auto& s : mm.superstables()) out.append(py_vec(s));
    return out;
  });
  m.def("criticals", [](const py::sequence& a) {
    const MMatrix mm(int_matrix(a));
    py::list out;
    for (const auto& s : mm.criticals()) out.append(py_vec(s));
    return out;
  });
  m.def("stabilize", [](const py::sequence& a, const py::iterable& c) {
    return py_vec(MMatrix(int_matrix(a)).stabilize(int_vector(c)));
  });

  py::class_<ChipFiringPair>(m, "Pair")
      .def(py::init([](const py::sequence& l, const py::sequence& mm) {
             return ChipFiringPair(int_matrix(l), int_matrix(mm));
           }),
           py::arg("L"), py::arg("M"))
      .def_property_readonly("L", [](const ChipFiringPair& p) { return py_matrix(p.L()); })
      .def_property_readonly("M", [](const ChipFiringPair& p) { return py_matrix(p.M().matrix()); })
      .def_property_readonly("size", &ChipFiringPair::size)
      .def_property_readonly("det_L", [](const ChipFiringPair& p) { return py_int(p.det_l()); })
      .def_property_readonly("det_M", [](const ChipFiringPair& p) { return py_int(p.det_m()); })
      .def_property_readonly("c_max", [](const ChipFiringPair& p) { return py_vec(p.M().c_max()); })
      .def("l_m_inv", [](const ChipFiringPair& p) { return py_matrix(p.l_m_inv()); })
      .def("m_l_inv", [](const ChipFiringPair& p) { return py_matrix(p.m_l_inv()); })
      .def("rplus_member", [](const ChipFiringPair& p, const py::iterable& x) { return p.rplus_member(rat_vector(x)); })
      .def("splus_member", [](const ChipFiringPair& p, const py::iterable& c) { return p.splus_member(int_vector(c)); })
      .def("to_preimage", [](const ChipFiringPair& p, const py::iterable& c) { return py_vec(p.to_preimage(int_vector(c))); })
      .def("to_config", [](const ChipFiringPair& p, const py::iterable& x) { return py_vec(p.to_config(rat_vector(x))); })
      .def("stabilize_rplus", [](const ChipFiringPair& p, const py::iterable& x) {
        return py_vec(p.stabilize_rplus(rat_vector(x)));
      })
      .def("classify", [](const ChipFiringPair& p, const py::iterable& c) {
        const Classification k = p.classify(int_vector(c));
        py::dict d;
        d["is_superstable"] = k.is_superstable;
        d["is_critical"] = k.is_critical;
        return d;
      })
      .def("superstables", [](const ChipFiringPair& p) {
        py::list out;
        for (const auto& c : p.superstables()) out.append(py_config(c));
        return out;
      })
      .def("criticals", [](const ChipFiringPair& p) {
        py::list out;
        for (const auto& c : p.criticals()) out.append(py_config(c));
        return out;
      })
      .def("critical_group", [](const ChipFiringPair& p) { return py_group(p.l_classes().group()); });

  m.def("duality", [](const ChipFiringPair& p, const py::iterable& x) { return py_vec(duality(p, rat_vector(x))); });
  m.def("duality_inverse", [](const ChipFiringPair& p, const py::iterable& y) {
    return py_vec(duality_inverse(p, rat_vector(y)));
  });
  m.def("involution_mu", [](const ChipFiringPair& p, const py::iterable& s) {
    return py_vec(involution_mu(p, int_vector(s)));
  });
  m.def("mu_case", [](const ChipFiringPair& p, const py::iterable& s) { return to_string(mu_case(p, int_vector(s))); });
  m.def("fixed_points", [](const ChipFiringPair& p) {
    py::list out;
    for (const auto& s : fixed_points(p)) out.append(py_vec(s));
    return out;
  });
  m.def("predicted_fixed_point_count", [](const ChipFiringPair& p) {
    const FixedPointPrediction f = predicted_fixed_point_count(p);
    py::dict d;
    d["zero_fracket_order"] = py_int(f.zero_fracket_order);
    d["order_le2_count"] = py_int(f.order_le2_count);
    d["predicted"] = py_int(f.predicted);
    d["actual"] = py_int(f.actual);
    return d;
  });

  m.def("frackets", [](const ChipFiringPair& p, const std::string& side) {
    py::list out;
    for (const auto& f : fracket_partition(p, parse_side(side)).frackets)
      out.append(py::make_tuple(py_vec(f.key), f.classes.size()));
    return out;
  }, py::arg("pair"), py::arg("side"), "(key, size) for every fracket, ascending by key.");
  m.def("fracket_quotient", [](const ChipFiringPair& p, const std::string& side) {
    return py_group(fracket_quotient(p, parse_side(side)));
  });
  m.def("zero_fracket_order", [](const ChipFiringPair& p, const std::string& side) {
    return py_int(zero_fracket_order(p, parse_side(side)));
  });

  m.def("pair_from_graph", [](std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, int>>& edges,
                              std::optional<std::size_t> sink) {
    std::vector<SignedEdge> es;
    for (const auto& [u, v, s] : edges) es.push_back({u, v, s});
    return reduced_laplacians(SignedGraph(n, std::move(es), sink));
  }, py::arg("n"), py::arg("edges"), py::arg("sink") = py::none(),
        "Reduced Laplacian pair of a signed graph; edges are (u, v, +1 | -1).");
  m.def("parse_graph", [](const std::string& text) { return reduced_laplacians(SignedGraph::parse(text)); },
        "Pair from an edge list ('n <count> sink <id>' header, then 'u v +' / 'u v -').");
  m.def("pair_from_json", [](const std::string& text) { return pair_from_json(json::parse(text)); });
  m.def("fixture", &reference::fixture, py::arg("name"));

  m.def("critical_groups", [](const std::string& kind, std::size_t n) {
    const CriticalGroupScan scan = scan_critical_groups(sweep(parse_family(kind), n));
    py::list out;
    for (const auto& g : scan.groups) out.append(py_group(g));
    return out;
  }, py::arg("kind"), py::arg("n"));

  m.def("run_criterion", [](int id) {
    CriterionResult r;
    {
      py::gil_scoped_release release;
      r = run_criterion(id);
    }
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    return d;
  });
}
