#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "prooflab/deduction.hpp"
#include "prooflab/error.hpp"
#include "prooflab/io.hpp"
#include "prooflab/module_algebra.hpp"
#include "prooflab/proof_tree.hpp"
#include "prooflab/subproof.hpp"

namespace py = pybind11;
using namespace prooflab;

namespace {

// Accepts either a PropClass or formula text wherever a class is expected.
PropClass as_class(const py::object& obj) {
  if (py::isinstance<PropClass>(obj)) return obj.cast<PropClass>();
  return canonicalize(parse(obj.cast<std::string>()));
}

std::vector<PropClass> as_classes(const py::iterable& items) {
  std::vector<PropClass> out;
  for (const auto& item : items) out.push_back(as_class(py::reinterpret_borrow<py::object>(item)));
  return out;
}

py::int_ to_pyint(const BigInt& value) {
  const std::string digits = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

std::optional<ProofPath> as_path(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return ProofPath::parse(*text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Propositional classes, Lindenbaum extensions and proof trees";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), e.detail());
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("render", [](const Formula& f) { return render(f); })
      .def("level", [](const Formula& f) { return level(f); })
      .def("atoms", [](const Formula& f) { return atoms(f); })
      .def("eval",
           [](const Formula& f, const std::map<std::string, bool, std::less<>>& bits, bool default_bit) {
             return eval(f, Valuation(bits, default_bit));
           },
           py::arg("valuation"), py::arg("default_bit") = false)
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; });

  py::class_<PropClass>(m, "PropClass")
      .def(py::init([](const std::string& formula) { return canonicalize(parse(formula)); }),
           py::arg("formula"))
      .def_static("from_text", &PropClass::from_text, py::arg("text"))
      .def_static("tautology", &PropClass::tautology)
      .def_static("contradiction", &PropClass::contradiction)
      .def_property_readonly("support", &PropClass::support)
      .def_property_readonly("table", &PropClass::table)
      .def("text", &PropClass::text)
      .def("is_tautology", &PropClass::is_tautology)
      .def("representative", [](const PropClass& c) { return render(representative(c)); })
      .def("entails", [](const PropClass& a, const py::object& b) { return entails(a, as_class(b)); })
      .def("__invert__", [](const PropClass& a) { return class_not(a); })
      .def("__and__", [](const PropClass& a, const PropClass& b) { return class_and(a, b); })
      .def("__or__", [](const PropClass& a, const PropClass& b) { return class_or(a, b); })
      .def("iff", [](const PropClass& a, const PropClass& b) { return class_iff(a, b); })
      .def("__eq__", [](const PropClass& a, const PropClass& b) { return a == b; })
      .def("__lt__", [](const PropClass& a, const PropClass& b) { return a < b; })
      .def("__hash__", [](const PropClass& c) { return py::hash(py::str(c.text())); })
      .def("__str__", &PropClass::text)
      .def("__repr__", [](const PropClass& c) { return "PropClass.from_text('" + c.text() + "')"; });

  m.def("canonicalize", [](const std::string& formula) { return canonicalize(parse(formula)); },
        py::arg("formula"));
  m.def("big_and", [](const py::iterable& items) { return big_and(as_classes(items)); });
  m.def("big_or", [](const py::iterable& items) { return big_or(as_classes(items)); });
  m.def("all_classes", &all_classes, py::arg("atoms"));

  py::class_<SigmaPrime>(m, "SigmaPrime")
      .def(py::init([](const py::iterable& base, bool default_bit) {
             return lindenbaum_extend(as_classes(base), default_bit);
           }),
           py::arg("base"), py::arg("default_bit") = false)
      .def_property_readonly("default_bit", &SigmaPrime::default_bit)
      .def_property_readonly("witness", [](const SigmaPrime& sp) { return sp.witness().explicit_bits(); })
      .def("witness_text", [](const SigmaPrime& sp) { return sp.witness().to_string(); })
      .def("__contains__", [](const SigmaPrime& sp, const py::object& c) { return member(sp, as_class(c)); })
      .def("add", [](const SigmaPrime& sp, const py::object& a, const py::object& b) {
        return ring_add(sp, as_class(a), as_class(b));
      })
      .def("mul", [](const SigmaPrime& sp, const py::object& a, const py::object& b) {
        return ring_mul(sp, as_class(a), as_class(b));
      });

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const py::object& c) { return Scalar::of(as_class(c)); }), py::arg("value"))
      .def_static("one", &Scalar::one)
      .def("is_one", &Scalar::is_one)
      .def("text", &Scalar::text)
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return scalar_product(a, b); })
      .def("__str__", &Scalar::text);

  py::class_<Deduction>(m, "Deduction")
      .def(py::init([](const py::iterable& steps, const SigmaPrime& sp) {
             return Deduction(as_classes(steps), sp);
           }),
           py::arg("steps"), py::arg("sigma"))
      .def("__len__", &Deduction::size)
      .def("step", &Deduction::step, py::arg("index"))
      .def("check",
           [](const Deduction& d, std::size_t max_steps) {
             const DeductionReport report = check_deduction(d, {.max_steps = max_steps});
             py::list rows;
             for (const auto& s : report.steps) {
               rows.append(py::make_tuple(s.index, std::string(clause_label(s.clause)), s.indices));
             }
             return py::make_tuple(report.valid(), rows);
           },
           py::arg("max_steps") = 20)
      .def("report", [](const Deduction& d) { return check_deduction(d).to_text(d); })
      .def("omega", [](const Deduction& d, std::size_t u) { return omega(d, u); }, py::arg("u"))
      .def("induce", [](const Deduction& d) { return induce_interpretation(d).readings(); })
      .def("validate", [](const Deduction& d, const std::vector<IndexSet>& readings) {
        return validate_interpretation(d, Interpretation(readings));
      })
      .def("prove", [](const Deduction& d) { return build_proof(d, induce_interpretation(d)); });

  m.def("nth_prime", &nth_prime, py::arg("j"));
  m.def("gamma", [](const IndexSet& h) { return to_pyint(gamma(h)); }, py::arg("indices"));

  py::class_<ProofNode>(m, "ProofNode")
      .def(py::init([](const std::string& text) { return parse_proof(text); }), py::arg("text"))
      .def_static("premise", [](const py::object& c) { return ProofNode::premise(as_class(c)); })
      .def_static("derived",
                  [](const py::object& c, std::vector<ProofNode> children) {
                    return ProofNode::derived(as_class(c), std::move(children));
                  },
                  py::arg("conclusion"), py::arg("children"))
      .def_property_readonly("conclusion", &ProofNode::conclusion)
      .def_property_readonly("children",
                             [](const ProofNode& r) {
                               return std::vector<ProofNode>(r.children().begin(), r.children().end());
                             })
      .def("is_premise", &ProofNode::is_premise)
      .def("serialize", [](const ProofNode& r) { return canonical_serialize(r); })
      .def("digest", [](const ProofNode& r) { return digest(r).hex(); })
      .def("normalize", [](const ProofNode& r) { return normalize(r); })
      .def("pretty", [](const ProofNode& r) { return pretty_print(r); })
      .def("to_file_text", [](const ProofNode& r) { return write_proof_text(r); })
      .def_static("from_file_text", &parse_proof_text, py::arg("text"))
      .def("premises", [](const ProofNode& r) {
        const auto set = premises(r);
        return std::vector<PropClass>(set.begin(), set.end());
      })
      .def("__eq__", [](const ProofNode& a, const ProofNode& b) { return proof_eq(a, b); })
      .def("__hash__", [](const ProofNode& r) { return py::hash(py::str(digest(r).hex())); })
      .def("__str__", [](const ProofNode& r) { return canonical_serialize(r); });

  m.def("proof_sum", &sum, py::arg("r1"), py::arg("r2"), py::arg("sigma"));
  m.def("scalar_mul", &scalar_mul, py::arg("scalar"), py::arg("r"), py::arg("sigma"));
  m.def("neutral_proof", &neutral_proof, py::arg("sigma"));
  m.def("embed_premise", [](const SigmaPrime& sp, const py::object& c) { return embed_premise(sp, as_class(c)); },
        py::arg("sigma"), py::arg("c"));

  m.def("find_occurrences",
        [](const ProofNode& r, const py::object& c) {
          std::vector<std::string> out;
          for (const auto& path : find_occurrences(r, as_class(c))) out.push_back(path.text());
          return out;
        },
        py::arg("r"), py::arg("sigma_class"));
  m.def("extract_subproof",
        [](const ProofNode& r, const std::string& path) { return extract_subproof(r, ProofPath::parse(path)); },
        py::arg("r"), py::arg("path"));
  m.def("replace_subproof",
        [](const ProofNode& target, const py::object& c, const ProofNode& donor, const SigmaPrime& sp,
           const std::optional<std::string>& path) {
          return replace_subproof(target, as_class(c), donor, sp, as_path(path));
        },
        py::arg("target"), py::arg("sigma_class"), py::arg("donor"), py::arg("sigma"),
        py::arg("single_path") = py::none());
  m.def("eliminate_subproof",
        [](const ProofNode& r, const py::object& c, const std::optional<std::string>& path) {
          return eliminate_subproof(r, as_class(c), as_path(path));
        },
        py::arg("r"), py::arg("sigma_class"), py::arg("single_path") = py::none());
}
