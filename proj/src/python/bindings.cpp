// Python bindings.  Monoids are wrapped objects; reports come back as
// plain dicts decoded from the same JSON the command line tool prints.
#include <memory>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monoext/builders.hpp"
#include "monoext/error.hpp"
#include "monoext/ext.hpp"
#include "monoext/green.hpp"
#include "monoext/irreps.hpp"
#include "monoext/json_io.hpp"
#include "monoext/modules.hpp"

namespace py = pybind11;
using namespace monoext;

namespace {

  struct PyMonoid {
    MonoidPtr ptr;
  };

  PyMonoid wrap(FiniteMonoid m) {
    return PyMonoid{std::make_shared<FiniteMonoid const>(std::move(m))};
  }

  py::object to_python(Json const& j) {
    return py::module_::import("json").attr("loads")(j.dump());
  }

  Json from_python(py::object const& obj) {
    if (py::isinstance<py::str>(obj)) {
      return read_json(obj.cast<std::string>());
    }
    auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return Json::parse(text);
  }

  MonRep source_module(std::string const& v, MonoidPtr const& m, Field const& f) {
    if (v == "trivial") {
      return trivial_module(m, f);
    }
    if (v == "kG") {
      return trivial_of_units(m, f);
    }
    throw Error(ErrorCode::kInvalidArgument, "V must be \"trivial\" or \"kG\"");
  }

  GroupRep group_module(std::string const& w, GroupPtr const& g, Field const& f) {
    if (w == "trivial") {
      return GroupRep::trivial(g, f);
    }
    return fixture_irrep(g, f, w);
  }

  py::dict ext(PyMonoid const& m, Element e, std::string const& v, std::string const& w, std::string const& field,
               int lo, int hi, std::string const& method, std::size_t cap) {
    Field f = Field::parse(field);
    require(e < m.ptr->size() && m.ptr->is_idempotent(e), ErrorCode::kNotIdempotent, "e must be an idempotent");
    RLData rl = ideal_data(*m.ptr, e);
    auto g = std::make_shared<GroupTable const>(rl.group);
    MonRep src = source_module(v, m.ptr, f);
    GroupRep tgt = group_module(w, g, f);
    ExtOptions opt{cap};
    ExtReport r;
    if (method == "topological") {
      r = ext_topological(src, e, tgt, lo, hi, opt);
    } else if (method == "oracle") {
      r = ext_oracle(src, coinduce(m.ptr, rl, tgt), lo, hi, opt);
    } else if (method == "ext1") {
      r = ext1_fast(src, e, tgt);
    } else if (method == "induced") {
      r = ext_from_induced(src, e, tgt, lo, hi, opt);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown method \"" + method + "\"");
    }
    return to_python(ext_report_to_json(r));
  }

  py::dict green(PyMonoid const& m) {
    auto g = green_structure(*m.ptr);
    auto flags = structural_flags(*m.ptr);
    py::dict d;
    d["r_classes"] = g.r_classes;
    d["l_classes"] = g.l_classes;
    d["h_classes"] = g.h_classes;
    d["j_classes"] = g.j_classes;
    d["idempotents"] = g.idempotents;
    d["regular"] = flags.regular;
    d["right_pp"] = flags.right_pp;
    d["left_pp"] = flags.left_pp;
    return d;
  }

  py::dict gldim_bound(PyMonoid const& m, std::string const& field) {
    auto b = global_dimension_bound(*m.ptr, Field::parse(field));
    py::dict d;
    d["applicable"] = b.applicable;
    d["bound"] = b.applicable ? py::object(py::int_(b.bound)) : py::object(py::none());
    d["regular"] = b.regular;
    d["reasons"] = b.reasons;
    py::list classes;
    for (auto const& w : b.witnesses) {
      py::dict c;
      c["j"] = w.j;
      c["e"] = w.e;
      c["group_order"] = w.group_order;
      c["good_characteristic"] = w.good_characteristic;
      c["right_invertible"] = w.right_invertible;
      classes.append(c);
    }
    d["j_classes"] = classes;
    return d;
  }

  py::dict resolution(PyMonoid const& m, std::string const& field, bool verify) {
    auto r = standard_resolution(m.ptr, Field::parse(field), verify);
    py::dict d;
    d["length"] = r.length;
    d["dims"] = r.dims;
    d["exact"] = r.exact;
    d["projective"] = r.projective;
    d["equivariant"] = r.equivariant;
    d["cellular"] = r.cellular;
    py::list layers;
    for (auto const& l : r.layers) {
      py::dict x;
      x["layer"] = l.layer;
      x["degree"] = l.degree;
      x["e"] = l.e;
      x["accepted"] = l.accepted;
      layers.append(x);
    }
    d["layers"] = layers;
    return d;
  }

}  // namespace

PYBIND11_MODULE(_monoext, mod) {
  mod.doc() = "Ext, Tor and cohomology of finite monoid algebras";

  static py::exception<Error> error_type(mod, "MonoextError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      PyErr_SetString(error_type.ptr(), (std::string(e.code_name()) + ": " + e.what()).c_str());
    }
  });

  py::class_<PyMonoid>(mod, "Monoid")
      .def_static(
          "from_json", [](py::object const& obj) { return wrap(monoid_from_json(from_python(obj))); },
          py::arg("description"), "Build from a table or builder description (dict, JSON text or file path).")
      .def_static("full_transformation", [](std::size_t n) { return wrap(full_transformation_monoid(n)); },
                  py::arg("n"))
      .def_static("affine", [](std::size_t n, std::uint32_t q) { return wrap(affine_monoid(n, q)); }, py::arg("n"),
                  py::arg("q"))
      .def_static("matrix", [](std::size_t n, std::uint32_t q) { return wrap(matrix_monoid(n, q)); }, py::arg("n"),
                  py::arg("q"))
      .def_static("cyclic_group", [](std::size_t n) { return wrap(cyclic_group_monoid(n)); }, py::arg("n"))
      .def("__len__", [](PyMonoid const& m) { return m.ptr->size(); })
      .def_property_readonly("size", [](PyMonoid const& m) { return m.ptr->size(); })
      .def_property_readonly("idempotents", [](PyMonoid const& m) { return m.ptr->idempotents(); })
      .def("mul", [](PyMonoid const& m, Element a, Element b) { return m.ptr->mul(a, b); })
      .def("opposite", [](PyMonoid const& m) { return wrap(m.ptr->opposite()); })
      .def("to_json", [](PyMonoid const& m) { return to_python(monoid_to_json(*m.ptr)); });

  mod.def("green", &green, py::arg("monoid"), "Green's classes and structural flags.");
  mod.def("ext", &ext, py::arg("monoid"), py::arg("e") = 0, py::arg("V") = "trivial", py::arg("W") = "trivial",
          py::arg("field") = "q", py::arg("lo") = 0, py::arg("hi") = 3, py::arg("method") = "topological",
          py::arg("cap") = kDefaultCellCap, "Ext^n(V, Coind_e(W)), or Ext^n(Ind_e(W), V) for method='induced'.");
  mod.def(
      "cohomology",
      [](PyMonoid const& m, std::string const& v, std::string const& field, int lo, int hi) {
        Field f = Field::parse(field);
        return to_python(ext_report_to_json(monoid_cohomology(source_module(v, m.ptr, f), lo, hi)));
      },
      py::arg("monoid"), py::arg("V") = "trivial", py::arg("field") = "q", py::arg("lo") = 0, py::arg("hi") = 3);
  mod.def(
      "homology", [](PyMonoid const& m, std::string const& field, int max_n) {
        return monoid_homology(m.ptr, Field::parse(field), max_n);
      },
      py::arg("monoid"), py::arg("field") = "q", py::arg("max_n") = 3);
  mod.def(
      "reduced_homology_dims",
      [](PyMonoid const& m, Element e, std::string const& field, int max_degree) {
        std::vector<std::size_t> out;
        for (int d = -1; d <= max_degree; ++d) {
          out.push_back(reduced_homology_rep(m.ptr, e, Field::parse(field), d).dim());
        }
        return out;
      },
      py::arg("monoid"), py::arg("e") = 0, py::arg("field") = "q", py::arg("max_degree") = 2,
      "Dimensions of the reduced homology of R(e) in degrees -1..max_degree.");
  mod.def("global_dimension_bound", &gldim_bound, py::arg("monoid"), py::arg("field") = "q");
  mod.def("standard_resolution", &resolution, py::arg("monoid"), py::arg("field") = "q", py::arg("verify") = true);
}
