#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "relalg/cli.hpp"
#include "relalg/factors.hpp"
#include "relalg/io.hpp"

namespace py = pybind11;
using namespace relalg;

namespace {

py::dict checks_dict(const IndexChecks& c) {
  py::dict d;
  d["contained"] = c.contained;
  d["reconstructs"] = c.reconstructs;
  d["left"] = c.left;
  d["right"] = c.right;
  return d;
}

py::object json_to_py(const Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Chooser chooser_of(const std::string& policy, std::uint64_t seed) { return {parse_policy(policy), seed}; }

}  // namespace

PYBIND11_MODULE(_relalg, m) {
  m.doc() = "Finite workbench for point-free relation algebra";

  static py::exception<ModelError> model_error(m, "ModelError", PyExc_ValueError);
  static py::exception<FormatError> format_error(m, "FormatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TypeError& e) {
      PyErr_SetString(PyExc_TypeError, e.what());
    } catch (const ModelError& e) {
      py::set_error(model_error, e.what());
    } catch (const FormatError& e) {
      py::set_error(format_error, e.what());
    }
  });

  py::class_<Carrier, std::shared_ptr<Carrier>>(m, "Carrier")
      .def(py::init([](const std::string& name, std::size_t size) {
             return std::const_pointer_cast<Carrier>(make_carrier(name, size));
           }),
           py::arg("name"), py::arg("size"))
      .def(py::init([](const std::string& name, std::vector<std::string> labels) {
             return std::const_pointer_cast<Carrier>(make_carrier(name, std::move(labels)));
           }),
           py::arg("name"), py::arg("labels"))
      .def_property_readonly("name", &Carrier::name)
      .def_property_readonly("size", &Carrier::size)
      .def_property_readonly("labels", &Carrier::labels)
      .def("__len__", &Carrier::size)
      .def("__eq__", [](const Carrier& a, const Carrier& b) { return a == b; })
      .def("__repr__", [](const Carrier& c) { return "Carrier('" + c.name() + "', " + std::to_string(c.size()) + ")"; });

  py::class_<Relation>(m, "Relation")
      .def(py::init([](std::shared_ptr<Carrier> src, std::shared_ptr<Carrier> dst, const std::vector<Pair>& pairs) {
             return Relation::from_pairs(src, dst, pairs);
           }),
           py::arg("src"), py::arg("dst"), py::arg("pairs") = std::vector<Pair>{})
      .def_static("top", [](std::shared_ptr<Carrier> a, std::shared_ptr<Carrier> b) { return Relation::top(a, b); })
      .def_static("bottom", [](std::shared_ptr<Carrier> a, std::shared_ptr<Carrier> b) { return Relation::bottom(a, b); })
      .def_static("identity", [](std::shared_ptr<Carrier> a) { return Relation::identity(a); })
      .def_property_readonly("src", [](const Relation& r) { return std::const_pointer_cast<Carrier>(r.src_ptr()); })
      .def_property_readonly("dst", [](const Relation& r) { return std::const_pointer_cast<Carrier>(r.dst_ptr()); })
      .def("pairs", &Relation::pairs)
      .def("contains", &Relation::contains)
      .def("__contains__", [](const Relation& r, const Pair& p) { return r.contains(p.first, p.second); })
      .def("__len__", &Relation::count)
      .def("__eq__", [](const Relation& a, const Relation& b) { return a == b; })
      .def("__matmul__", [](const Relation& a, const Relation& b) { return compose(a, b); })
      .def("__or__", [](const Relation& a, const Relation& b) { return unite(a, b); })
      .def("__and__", [](const Relation& a, const Relation& b) { return intersect(a, b); })
      .def("__le__", [](const Relation& a, const Relation& b) { return is_subset(a, b); })
      .def_property_readonly("T", [](const Relation& r) { return converse(r); })
      .def("to_json", [](const Relation& r) { return to_json(r).dump(); })
      .def("to_dot", [](const Relation& r, const std::string& name) { return to_dot(r, {name, true, std::nullopt}); },
           py::arg("name") = "R")
      .def("__repr__", [](const Relation& r) {
        std::ostringstream out;
        out << "Relation(" << r.src().name() << "~" << r.dst().name() << ", [";
        bool first = true;
        for (const auto& [i, j] : r.pairs()) {
          out << (first ? "" : ", ") << "(" << i << ", " << j << ")";
          first = false;
        }
        out << "])";
        return out.str();
      });

  m.def("compose", py::overload_cast<const Relation&, const Relation&>(&compose));
  m.def("converse", &converse);
  m.def("complement", &complement);
  m.def("left_residual", &left_residual);
  m.def("right_residual", &right_residual);
  m.def("sym_right_div", &sym_right_div);
  m.def("sym_left_div", &sym_left_div);
  m.def("ldom", [](const Relation& r) { return ldom(r).relation(); });
  m.def("rdom", [](const Relation& r) { return rdom(r).relation(); });
  m.def("per_ldom", &per_ldom);
  m.def("per_rdom", &per_rdom);
  m.def("is_per", &is_per);
  m.def("is_difunctional", &is_difunctional);
  m.def("cone_check", &cone_check);
  m.def("dedekind_check", [](const Relation& r, const Relation& s, const Relation& t) {
    return dedekind_check(r, s, t).holds();
  });

  m.def("classify", [](const Relation& r) {
    py::dict out;
    const auto rep = classify(r);
    for (const auto* c : rep.all()) out[py::str(c->name)] = c->value;
    return out;
  });

  m.def(
      "relation_index",
      [](const Relation& r, const std::string& policy, std::uint64_t seed) {
        const auto cert = relation_index(r, chooser_of(policy, seed));
        return py::make_tuple(cert.index, checks_dict(cert.checks));
      },
      py::arg("relation"), py::arg("policy") = "min", py::arg("seed") = 0);
  m.def("verify_index", [](const Relation& r, const Relation& j) { return checks_dict(verify_index(r, j).checks); });
  m.def(
      "per_index",
      [](const Relation& p, const std::string& policy, std::uint64_t seed) {
        return per_index(p, chooser_of(policy, seed)).relation();
      },
      py::arg("per"), py::arg("policy") = "min", py::arg("seed") = 0);
  m.def(
      "splitting",
      [](const Relation& p, const std::string& policy, std::uint64_t seed) {
        return splitting(p, chooser_of(policy, seed));
      },
      py::arg("per"), py::arg("policy") = "min", py::arg("seed") = 0);
  m.def("all_indexes", [](const Relation& r) { return all_indexes(r); });
  m.def(
      "core_of",
      [](const Relation& r, const std::string& mode, const std::string& policy, std::uint64_t seed) {
        const auto d = core_of(r, parse_core_mode(mode), chooser_of(policy, seed));
        py::dict out;
        out["core"] = d.core;
        out["lambda"] = d.lambda;
        out["rho"] = d.rho;
        out["valid"] = d.checks.all();
        return out;
      },
      py::arg("relation"), py::arg("mode") = "same-type", py::arg("policy") = "min", py::arg("seed") = 0);

  m.def(
      "find_isomorphism",
      [](const Relation& r, const Relation& s, std::size_t bound) -> py::object {
        const auto w = find_isomorphism(r, s, bound);
        if (!w) return py::none();
        return py::make_tuple(w->phi, w->psi);
      },
      py::arg("r"), py::arg("s"), py::arg("bound") = kDefaultIsoBound);

  m.def("is_point", &is_point);
  m.def("is_pair", &is_pair);
  m.def("is_particle", &is_particle);
  m.def("points", [](std::shared_ptr<Carrier> c) { return points(c); });
  m.def("decompose_to_pairs", [](const Relation& r) {
    std::vector<Pair> out;
    for (const auto& p : decompose_to_pairs(r)) out.emplace_back(p.a.pairs().front().first, p.b.pairs().front().first);
    return out;
  });
  m.def("all_or_nothing", [](const Relation& r, const Relation& a, const Relation& b) {
    return all_or_nothing(r, a, b) == Outcome::Full ? "full" : "bottom";
  });

  m.def("parse_relation", [](const std::string& text) { return parse_relation(text); });
  m.def("load_relation", &load_relation);

  m.def("check_model", [](const std::string& path) { return json_to_py(to_json(check_axioms(load_model(path)))); });
  m.def("bundled_models", [] {
    std::vector<std::string> names;
    for (const auto& b : bundled_models()) names.push_back(b.name);
    return names;
  });
  m.def("check_bundled", [](const std::string& name) {
    return json_to_py(to_json(check_axioms(bundled_model(name).model)));
  });

  m.def(
      "run_laws",
      [](std::size_t max_size, std::size_t samples, std::uint64_t seed, const std::string& filter) {
        RunOptions opt;
        opt.max_size = max_size;
        opt.samples = samples;
        opt.seed = seed;
        opt.filter = filter;
        py::list out;
        for (const auto& r : run_suite(opt)) out.append(json_to_py(to_json(r)));
        return out;
      },
      py::arg("max_size") = 2, py::arg("samples") = 0, py::arg("seed") = 0, py::arg("filter") = "*");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
