#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverhom/commands.hpp"
#include "quiverhom/shell.hpp"

namespace py = pybind11;

namespace {

py::tuple run(const std::string& command, const std::string& algebra, std::optional<std::string> module,
              std::optional<std::size_t> steps, std::size_t max_steps, std::size_t max_dim, bool decompose,
              std::size_t trials, std::uint64_t seed, std::optional<std::string> split,
              std::optional<std::string> field) {
    qh::RunOptions o;
    o.algebra = algebra;
    o.module = std::move(module);
    o.steps = steps;
    o.max_steps = max_steps;
    o.max_dim = max_dim;
    o.decompose = decompose;
    o.trials = trials;
    o.seed = seed;
    o.split = std::move(split);
    o.field = std::move(field);
    qh::RunReport r;
    {
        py::gil_scoped_release release;
        r = qh::run_command(command, o);
    }
    return py::make_tuple(static_cast<int>(r.exit), r.json().dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Homological invariants of bound quiver algebras.";
    m.def("commands", &qh::command_names, "Names of the available commands.");
    m.def("corpus", [] {
        std::vector<std::string> names;
        for (const qh::CorpusFile& f : qh::corpus()) names.push_back(f.name);
        return names;
    }, "Names of the embedded algebra and split files.");
    m.def("corpus_text", [](const std::string& name) { return qh::corpus_file(name).text; }, py::arg("name"));
    m.def("run", &run, py::arg("command"), py::arg("algebra"), py::arg("module") = py::none(),
          py::arg("steps") = py::none(), py::arg("max_steps") = 1000, py::arg("max_dim") = 128,
          py::arg("decompose") = false, py::arg("trials") = 20, py::arg("seed") = 0, py::arg("split") = py::none(),
          py::arg("field") = py::none(), "Run a command; returns (exit code, JSON report text).");
}
