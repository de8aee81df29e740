#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "handlecalc/braid.hpp"
#include "handlecalc/cli.hpp"
#include "handlecalc/garside.hpp"
#include "handlecalc/json_io.hpp"
#include "handlecalc/simplifier.hpp"

namespace py = pybind11;
using namespace hcalc;

namespace {

// JSON documents cross the boundary as text; the Python package wraps them
// with the json module.
std::string dump(const json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_handlecalc, m) {
  m.doc() = "Rewriting engine for 1-handle configurations labelled by braid words";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());
  py::register_exception<DegreeMismatch>(m, "DegreeMismatch", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  m.def("free_reduce", [](const std::string& w, int n) { return make_word(w, n).to_string(); }, py::arg("word"),
        py::arg("degree"));
  m.def("invert", [](const std::string& w, int n) { return invert(make_word(w, n)).to_string(); }, py::arg("word"),
        py::arg("degree"));
  m.def("concat",
        [](const std::string& a, const std::string& b, int n) { return concat(make_word(a, n), make_word(b, n)).to_string(); },
        py::arg("a"), py::arg("b"), py::arg("degree"));
  m.def("is_trivial", [](const std::string& w, int n) { return is_trivial(make_word(w, n)); }, py::arg("word"),
        py::arg("degree"));
  m.def("braid_equal",
        [](const std::string& a, const std::string& b, int n) { return braid_equal(make_word(a, n), make_word(b, n)); },
        py::arg("a"), py::arg("b"), py::arg("degree"));
  m.def("commutes",
        [](const std::string& a, const std::string& b, int n) { return commutes(make_word(a, n), make_word(b, n)); },
        py::arg("a"), py::arg("b"), py::arg("degree"));
  m.def("underlying_permutation",
        [](const std::string& w, int n) { return underlying_permutation(make_word(w, n)).to_string(); },
        py::arg("word"), py::arg("degree"));
  m.def("weak_bound", &weak_bound, py::arg("degree"), py::arg("w"), py::arg("b"), py::arg("c"));

  m.def("validate_json", [](const std::string& text) {
    ValidateResult r = validate_document(parse_json_text(text));
    return dump(r.document);
  });
  m.def("stats_json", [](const std::string& text) { return dump(stats_document(parse_json_text(text))); });
  m.def("bound_json", [](const std::string& text) { return dump(bound_document(parse_json_text(text))); });
  m.def("plan_json", [](const std::string& text) { return dump(plan_document(parse_json_text(text))); });
  m.def(
      "simplify_json",
      [](const std::string& text, const std::string& mode, int epsilon, std::uint64_t seed, std::size_t max_steps,
         bool fixed_disk, bool shifted) {
        SimplifyRequest r;
        r.mode = mode;
        r.epsilon = epsilon;
        r.options.seed = seed;
        r.options.max_steps = max_steps;
        r.options.fixed_disk = fixed_disk;
        r.options.shifted = shifted;
        return dump(simplify_document(parse_json_text(text), r));
      },
      py::arg("text"), py::arg("mode"), py::arg("epsilon") = 1, py::arg("seed") = 0, py::arg("max_steps") = 100000,
      py::arg("fixed_disk") = false, py::arg("shifted") = false);
  m.def("verify_json", [](const std::string& text) { return dump(to_json(verify_document(parse_json_text(text)))); });
}
