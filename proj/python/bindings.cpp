#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "depcat/instances.hpp"
#include "depcat/serialize.hpp"
#include "depcat/suites.hpp"

namespace py = pybind11;
using namespace depcat;

namespace {

py::list reports_to_py(const std::vector<LawReport>& reports) {
  py::list out;
  for (const auto& r : reports) {
    py::dict suite;
    suite["suite"] = r.suite;
    suite["passed"] = r.all_passed();
    py::list entries;
    for (const auto& e : r.entries) {
      py::dict entry;
      entry["law"] = e.law;
      entry["passed"] = e.passed;
      entry["checked"] = e.checked;
      entry["witness"] = e.witness;
      entries.append(entry);
    }
    suite["entries"] = entries;
    out.append(suite);
  }
  return out;
}

InstanceSpec spec_from_kwargs(const std::string& kind, const py::kwargs& kwargs) {
  InstanceSpec spec;
  spec.kind = kind;
  for (auto item : kwargs) {
    const std::string key = py::cast<std::string>(item.first);
    if (key == "max_object_size") spec.max_object_size = py::cast<std::size_t>(item.second);
    else if (key == "fiber_cap") spec.fiber_cap = py::cast<std::size_t>(item.second);
    else if (key == "fam") spec.fam = py::cast<std::string>(item.second);
    else if (key == "sigma") spec.sigma = py::cast<std::string>(item.second);
    else if (key == "dep") spec.dep = py::cast<std::string>(item.second);
    else if (key == "pr2") spec.pr2 = py::cast<std::string>(item.second);
    else if (key == "modulus") spec.modulus = py::cast<std::size_t>(item.second);
    else if (key == "objects") spec.objects = py::cast<std::size_t>(item.second);
    else if (key == "chain") spec.chain = py::cast<std::size_t>(item.second);
    else if (key == "budget") spec.budget = py::cast<std::size_t>(item.second);
    else if (key == "path") spec.path = py::cast<std::string>(item.second);
    else if (key == "table")
      spec.table = py::cast<std::vector<std::vector<std::uint32_t>>>(item.second);
    else if (key == "relation")
      spec.relation =
          py::cast<std::vector<std::pair<std::uint32_t, std::uint32_t>>>(item.second);
    else if (key == "self_check") continue;  // handled by caller
    else throw InvalidSpec("unknown generate() argument '" + key + "'");
  }
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-category engine: family-arrow, Sigma-object and dependent-arrow "
            "structures with exhaustive law checking.";

  py::register_exception<Error>(m, "DepcatError", PyExc_ValueError);

  py::class_<StructureDocument>(m, "Document")
      .def_readonly("kind", &StructureDocument::kind)
      .def_readonly("meta", &StructureDocument::meta)
      .def_property_readonly("num_objects",
                             [](const StructureDocument& d) { return d.category.num_objects(); })
      .def_property_readonly("num_arrows",
                             [](const StructureDocument& d) { return d.category.num_arrows(); })
      .def_property_readonly("num_families",
                             [](const StructureDocument& d) {
                               return d.fam ? d.fam->size() : 0;
                             })
      .def_property_readonly("num_dep_arrows",
                             [](const StructureDocument& d) {
                               return d.dep ? d.dep->size() : 0;
                             })
      .def("hom_size",
           [](const StructureDocument& d, ObjectId a, ObjectId b) {
             return d.category.hom(a, b).size();
           })
      .def("fam_count_of",
           [](const StructureDocument& d, ObjectId a) {
             if (!d.fam) throw LayerMissing("fam");
             d.category.check_object(a);
             return d.fam->fam_of[a].size();
           })
      .def("dep_count_of",
           [](const StructureDocument& d, FamArrowId lam) {
             if (!d.dep) throw LayerMissing("dep");
             if (lam >= d.fam->size()) throw UnknownArrow("family " + std::to_string(lam));
             return d.dep->dep_of[lam].size();
           })
      .def("is_mono",
           [](const StructureDocument& d, ArrowId f) { return d.category.is_mono(f); })
      .def("terminal_object",
           [](const StructureDocument& d) -> py::object {
             auto t = terminal(d.category);
             return t ? py::cast(t->object) : py::none();
           })
      .def("global_element_count",
           [](const StructureDocument& d, ObjectId a) {
             return global_elements(d.category, a).size();
           })
      .def("product_apex",
           [](const StructureDocument& d, ObjectId a, ObjectId b) -> py::object {
             auto w = binary_product(d.category, a, b);
             return w ? py::cast(w->apex) : py::none();
           })
      .def("sigma_object",
           [](const StructureDocument& d, FamArrowId lam) {
             if (!d.sigma) throw LayerMissing("sigma");
             return d.sigma->sigma_obj.at(lam);
           })
      .def("to_json", [](const StructureDocument& d) { return serialize(d); })
      .def("__eq__", [](const StructureDocument& a, const StructureDocument& b) { return a == b; })
      .def("__repr__", [](const StructureDocument& d) {
        return "<depcat.Document " + d.meta + ">";
      });

  m.def(
      "generate",
      [](const std::string& kind, const py::kwargs& kwargs) {
        const bool self_check =
            !kwargs.contains("self_check") || py::cast<bool>(kwargs["self_check"]);
        return generate(spec_from_kwargs(kind, kwargs), self_check);
      },
      py::arg("kind"),
      "Generate an instance document (finset, ring, discrete, poset, monoid).");
  m.def("loads", [](const std::string& bytes) { return deserialize(bytes); });
  m.def("load", [](const std::string& path) { return load_document(path); });
  m.def("save", [](const StructureDocument& d, const std::string& path) {
    save_document(d, path);
  });
  m.def("applicable_suites", &applicable_suites);
  m.def(
      "run_suites",
      [](const StructureDocument& doc, const std::vector<std::string>& suites,
         std::size_t budget) { return reports_to_py(run_suites(doc, suites, budget)); },
      py::arg("doc"), py::arg("suites") = std::vector<std::string>{},
      py::arg("budget") = kDefaultBudget);
  m.def(
      "check",
      [](const StructureDocument& doc) { return all_passed(run_suites(doc, {})); },
      "Run all applicable suites; True iff every law passes.");
  m.def("report_text", [](const StructureDocument& doc) {
    return report_text(run_suites(doc, {}));
  });
  m.def("mutable_laws", &mutable_laws);
  m.def("mutate_for_law", [](const StructureDocument& doc, const std::string& law) {
    MutationOutcome out = mutate_for_law(doc, law);
    return py::make_tuple(out.description, out.suite, out.doc);
  });
  m.def(
      "bijection_counts",
      [](const StructureDocument& doc, ObjectId a, ObjectId b) {
        const DepObjectBijection bij = dep_object_bijection(doc.category, a, b);
        if (!check_dep_object_bijection(doc.category, bij).all_passed())
          throw PullbackMediatorMissing("bijection round trip failed");
        return py::make_tuple(bij.hom_ab.size(), bij.sections.size());
      },
      "(|Hom(a,b)|, |sections of a×b → a|), verified mutually inverse.");
}
