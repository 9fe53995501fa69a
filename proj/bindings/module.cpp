#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "peqa/render.hpp"

namespace py = pybind11;
using namespace peqa;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

struct PyAlgebra {
  AlgebraDocument doc;

  FiniteEqAlgebra eq() const { return eq_from_document(doc); }
};

PyAlgebra load(const std::string& text) { return PyAlgebra{parse_document(text)}; }

PyAlgebra from_eq(const FiniteEqAlgebra& a, const std::string& name) {
  return PyAlgebra{document_from_eq(a, name)};
}

}  // namespace

PYBIND11_MODULE(peqa, m) {
  m.doc() = "finite pseudo equality algebra workbench";

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("name", [](const PyAlgebra& p) { return p.doc.name; })
      .def_property_readonly("kind",
                             [](const PyAlgebra& p) { return kind_name(p.doc.kind); })
      .def_property_readonly("elements",
                             [](const PyAlgebra& p) { return p.doc.elements; })
      .def("render", [](const PyAlgebra& p) { return render_document(p.doc); })
      .def("validate",
           [](const PyAlgebra& p) {
             switch (p.doc.kind) {
               case DocKind::eq: {
                 FiniteEqAlgebra a = eq_from_document(p.doc);
                 return json_to_py(check_report_json(verify_axioms(a), a.carrier));
               }
               case DocKind::bck: {
                 FiniteBckMs b = bck_from_document(p.doc);
                 return json_to_py(check_report_json(verify_bck(b), b.carrier));
               }
               case DocKind::hoop: {
                 FinitePseudoHoop h = hoop_from_document(p.doc);
                 return json_to_py(
                     check_report_json(verify_pseudo_hoop(h), h.carrier));
               }
             }
             return py::object(py::none());
           })
      .def("props",
           [](const PyAlgebra& p) {
             FiniteEqAlgebra a = p.eq();
             return json_to_py(props_json(classify(a), is_simple(a), a.carrier));
           })
      .def("laws",
           [](const PyAlgebra& p) {
             FiniteEqAlgebra a = p.eq();
             return json_to_py(check_report_json(derived_law_suite(a), a.carrier));
           })
      .def("psi",
           [](const PyAlgebra& p) {
             FiniteBckMs b = psi(p.eq());
             return PyAlgebra{document_from_bck(b, p.doc.name, p.doc.point)};
           })
      .def("phi",
           [](const PyAlgebra& p) {
             FiniteEqAlgebra a = phi(bck_from_document(p.doc));
             return PyAlgebra{document_from_eq(a, p.doc.name, p.doc.point)};
           })
      .def("roundtrip",
           [](const PyAlgebra& p) {
             return json_to_py(roundtrip_json(roundtrip_report(p.eq())));
           })
      .def(
          "ds",
          [](const PyAlgebra& p, bool normal_only) {
            FiniteEqAlgebra a = p.eq();
            py::list out;
            for (const SubsetMask& d : enumerate_ds(a, normal_only))
              out.append(json_to_py(mask_json(d, a.carrier)));
            return out;
          },
          py::arg("normal_only") = false)
      .def("congruences",
           [](const PyAlgebra& p) {
             FiniteEqAlgebra a = p.eq();
             CongruenceScan scan = congruences(a);
             py::list out;
             for (const CongruenceRelation& rel : scan.all) {
               py::list blocks;
               for (const auto& block : rel.blocks()) {
                 py::list b;
                 for (int x : block) b.append(a.carrier.name(x));
                 blocks.append(b);
               }
               out.append(blocks);
             }
             return out;
           })
      .def("quotient",
           [](const PyAlgebra& p, const std::vector<std::string>& tokens) {
             FiniteEqAlgebra a = p.eq();
             SubsetMask m = SubsetMask::empty(a.n());
             for (const std::string& t : tokens) {
               const int i = a.carrier.index_of(t);
               if (i < 0) fail(Errc::unknown_token, "undeclared token '" + t + "'");
               m.insert(i);
             }
             Quotient q = quotient(a, m);
             return from_eq(q.algebra, p.doc.name + "_quot");
           })
      .def(
          "states",
          [](const PyAlgebra& p, const std::string& kind, int jobs) {
            FiniteEqAlgebra a = p.eq();
            const StateKind k = kind == "II" ? StateKind::type_ii : StateKind::type_i;
            py::list out;
            for (const UnaryOperator& sg : enumerate_states(a, k, jobs))
              out.append(json_to_py(operator_json(sg, a.carrier)));
            return out;
          },
          py::arg("kind") = "I", py::arg("jobs") = 1)
      .def("morphisms",
           [](const PyAlgebra& p) {
             FiniteEqAlgebra a = p.eq();
             py::list out;
             for (const UnaryOperator& sg : enumerate_morphisms(a))
               out.append(json_to_py(operator_json(sg, a.carrier)));
             return out;
           })
      .def("correspondence",
           [](const PyAlgebra& p) {
             FiniteEqAlgebra a = p.eq();
             return json_to_py(correspondence_json(state_correspondence(a), a.carrier));
           })
      .def(
          "bosbach",
          [](const PyAlgebra& p, const std::string& point, bool compare_bck) {
            FiniteEqAlgebra a = p.eq();
            PointedEqAlgebra pt = make_pointed(a, point);
            if (!compare_bck)
              return json_to_py(bosbach_json(solve_bosbach(pt), a.carrier));
            BckCompareReport r = bosbach_bck_compare(pt);
            Json j;
            j["eqa"] = bosbach_json(r.eqa, a.carrier);
            j["bck"] = bosbach_json(r.bck, a.carrier);
            j["eqa_subset_of_bck"] = r.eqa_subset_of_bck;
            j["spaces_equal"] = r.spaces_equal;
            j["equality_asserted"] = r.equality_asserted;
            return json_to_py(j);
          },
          py::arg("point"), py::arg("compare_bck") = false)
      .def(
          "check_bosbach",
          [](const PyAlgebra& p, const std::string& point,
             const std::vector<std::string>& values) {
            FiniteEqAlgebra a = p.eq();
            PointedEqAlgebra pt = make_pointed(a, point);
            std::vector<Rational> v;
            for (const std::string& s : values) v.push_back(Rational::parse(s));
            return is_bosbach(pt, v).ok;
          },
          py::arg("point"), py::arg("values"));

  m.def("load", &load, py::arg("text"), "parse an algebra document");
  m.def(
      "product",
      [](const PyAlgebra& x, const PyAlgebra& y) {
        return from_eq(product(eq_from_document(x.doc), eq_from_document(y.doc)),
                       x.doc.name + "x" + y.doc.name);
      },
      py::arg("left"), py::arg("right"), "componentwise product");
  m.def(
      "search",
      [](int size, const std::vector<std::string>& require,
         const std::vector<std::string>& forbid, int limit, int jobs) {
        SearchSpec spec{size, require, forbid, limit, jobs};
        py::list out;
        int i = 0;
        for (const FiniteEqAlgebra& a : enumerate_models(spec))
          out.append(from_eq(a, "m" + std::to_string(size) + "-" +
                                    std::to_string(++i)));
        return out;
      },
      py::arg("size"), py::arg("require") = std::vector<std::string>{},
      py::arg("forbid") = std::vector<std::string>{}, py::arg("limit") = 0,
      py::arg("jobs") = 1);
  m.def(
      "find_counterexample",
      [](const std::string& claim, int max_size) -> py::object {
        SearchSpec spec{max_size, {}, {}, 0, 1};
        std::optional<FiniteEqAlgebra> w = find_counterexample(spec, claim);
        if (!w) return py::none();
        return py::cast(from_eq(*w, "witness"));
      },
      py::arg("claim"), py::arg("max_size") = 4);

  py::register_exception<Error>(m, "PeqaError");
}
