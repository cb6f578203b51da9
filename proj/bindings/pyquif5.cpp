#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quif5/buchberger.hpp"
#include "quif5/loewy.hpp"
#include "quif5/oracle.hpp"
#include "quif5/parser.hpp"
#include "quif5/random_instance.hpp"

namespace py = pybind11;
using namespace quif5;

namespace {

/// Thin owning wrapper: parses and builds a problem once, then serves the
/// main operations with plain Python data as results.
class Problem {
public:
    explicit Problem(const std::string& text)
        : file_(parse_problem(text)), built_(build_problem(file_)) {}

    std::int64_t characteristic() const { return file_.p; }
    int algebra_dim() const { return built_.algebra->dim(); }
    int nilpotency() const { return built_.algebra->nilpotency(); }

    std::vector<std::string> stdmon() const {
        std::vector<std::string> out;
        for (int m = 0; m < built_.algebra->dim(); ++m)
            out.push_back(built_.algebra->quiver().path_str(built_.algebra->mono_path(m)));
        return out;
    }

    std::vector<std::string> generators() const {
        std::vector<std::string> out;
        for (const ModuleElement& g : built_.generators)
            out.push_back(built_.module->element_str(g));
        return out;
    }

    std::string canonical_text() const { return print_problem(file_); }

    py::dict buchberger() const {
        BuchbergerResult r = buchberger_stdbasis(*built_.module, built_.generators);
        py::list basis;
        for (const ModuleElement& b : r.basis) basis.append(built_.module->element_str(b));
        py::dict stats;
        stats["topplings_processed"] = r.stats.topplings_processed;
        stats["zero_reductions"] = r.stats.zero_reductions;
        py::dict out;
        out["basis"] = basis;
        out["stats"] = stats;
        return out;
    }

    py::dict f5() const {
        F5Result r = f5_stdbasis(*built_.module, built_.generators);
        py::list basis;
        for (const SignedElement& g : r.basis) {
            py::dict e;
            e["poly"] = built_.module->element_str(g.poly);
            e["signature"] = sig_str(g.sig);
            basis.append(e);
        }
        py::list syz;
        for (const Signature& s : r.syzygies.entries()) syz.append(sig_str(s));
        py::dict stats;
        stats["pairs_considered"] = r.stats.pairs_considered;
        stats["pairs_skipped_not_normal"] = r.stats.pairs_skipped_not_normal;
        stats["pairs_skipped_reducer"] = r.stats.pairs_skipped_reducer;
        stats["zero_reductions"] = r.stats.zero_reductions;
        py::dict out;
        out["basis"] = basis;
        out["syzygy_lms"] = syz;
        out["stats"] = stats;
        return out;
    }

    std::vector<int> loewy_dims() const {
        F5Result r = f5_stdbasis(*built_.module, built_.generators);
        std::vector<int> dims;
        for (const LoewyLayer& l : loewy_layers(*built_.module, r.basis))
            dims.push_back(static_cast<int>(l.basis.size()));
        return dims;
    }

    std::vector<std::vector<std::string>> loewy_layer_bases() const {
        F5Result r = f5_stdbasis(*built_.module, built_.generators);
        std::vector<std::vector<std::string>> out;
        for (const LoewyLayer& l : loewy_layers(*built_.module, r.basis)) {
            std::vector<std::string> layer;
            for (const ModuleElement& e : l.basis)
                layer.push_back(built_.module->element_str(e));
            out.push_back(std::move(layer));
        }
        return out;
    }

    std::vector<std::string> minimal_generators() const {
        F5Result r = f5_stdbasis(*built_.module, built_.generators);
        std::vector<std::string> out;
        for (const ModuleElement& e : quif5::minimal_generators(*built_.module, r.basis))
            out.push_back(built_.module->element_str(e));
        return out;
    }

    std::vector<int> radical_filtration() const {
        return Oracle(*built_.module).radical_filtration(built_.generators);
    }

    bool oracle_verify(const std::string& algorithm) const {
        std::vector<ModuleElement> basis;
        if (algorithm == "f5") {
            for (const SignedElement& g : f5_stdbasis(*built_.module, built_.generators).basis)
                basis.push_back(g.poly);
        } else if (algorithm == "buchberger") {
            basis = buchberger_stdbasis(*built_.module, built_.generators).basis;
        } else {
            throw py::value_error("algorithm must be 'f5' or 'buchberger'");
        }
        return Oracle(*built_.module).verify_standard_basis(built_.generators, basis);
    }

private:
    std::string sig_str(const Signature& s) const {
        return "e" + std::to_string(s.gen + 1) + "*" +
               built_.module->algebra().quiver().path_str(s.path);
    }

    ProblemFile file_;
    BuiltProblem built_;
};

}  // namespace

PYBIND11_MODULE(_pyquif5, m) {
    m.doc() = "Signed standard bases over basic path-algebra quotients";

    static py::exception<Error> exc(m, "AlgebraError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    py::class_<Problem>(m, "Problem")
        .def(py::init<const std::string&>(), py::arg("text"))
        .def_property_readonly("characteristic", &Problem::characteristic)
        .def_property_readonly("algebra_dim", &Problem::algebra_dim)
        .def_property_readonly("nilpotency", &Problem::nilpotency)
        .def("stdmon", &Problem::stdmon)
        .def("generators", &Problem::generators)
        .def("canonical_text", &Problem::canonical_text)
        .def("buchberger", &Problem::buchberger)
        .def("f5", &Problem::f5)
        .def("loewy_dims", &Problem::loewy_dims)
        .def("loewy_layer_bases", &Problem::loewy_layer_bases)
        .def("minimal_generators", &Problem::minimal_generators)
        .def("radical_filtration", &Problem::radical_filtration)
        .def("oracle_verify", &Problem::oracle_verify, py::arg("algorithm") = "f5");

    m.def(
        "random_problem_text",
        [](std::uint64_t seed) { return print_problem(random_instance(seed).file); },
        py::arg("seed"), "Deterministic random desk-size problem in text form");
}
