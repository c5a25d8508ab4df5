#include "gnatfam/enumerate.hpp"
#include "gnatfam/error.hpp"
#include "gnatfam/io.hpp"
#include "gnatfam/reductor.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gnatfam;

// JSON crosses the boundary as text; the Python package decodes it.
namespace {

std::string family_text(const Instance& inst, const ReductorSet& set) {
  return io::family_to_json(inst, set).dump();
}

ReductorSet parse_family(const Instance& inst, const std::string& text) {
  return io::family_from_json(inst, io::Json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "gnatfam native core";

  static py::exception<Error> error_type(m, "GnatfamError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    } catch (const io::Json::exception& e) {
      PyErr_SetString(error_type.ptr(), (std::string("InputError: ") + e.what()).c_str());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_static(
          "from_json",
          [](const std::string& text) { return io::load_instance(io::parse_instance(io::Json::parse(text))); },
          py::arg("text"))
      .def_property_readonly("dimension", [](const Instance& i) { return i.group.dimension(); })
      .def_property_readonly("group_order", [](const Instance& i) { return i.group.order(); })
      .def_property_readonly("characters",
                             [](const Instance& i) {
                               std::vector<std::string> out;
                               for (const auto& c : i.group.characters()) out.push_back(to_string(c));
                               return out;
                             })
      .def("rays_json", [](const Instance& i) { return io::rays_to_json(i.fan).dump(); })
      .def("canonical_json", [](const Instance& i) { return family_text(i, canonical_set(i)); })
      .def("maxshift_json", [](const Instance& i) { return family_text(i, maxshift_set(i)); })
      .def("minshift_json", [](const Instance& i) { return family_text(i, minshift_set(i)); })
      .def(
          "counts_json",
          [](const Instance& i, unsigned jobs) {
            py::gil_scoped_release release;
            return io::counts_to_json(build_catalog(i, jobs)).dump();
          },
          py::arg("jobs") = 1)
      .def(
          "ray_solutions",
          [](const Instance& i, std::size_t ray, bool brute_force) {
            const auto set = brute_force ? brute_force_per_ray(i, ray) : per_ray_solutions(i, ray);
            std::vector<std::vector<std::string>> out;
            for (const auto& q : set.solutions) {
              std::vector<std::string> row;
              for (const auto& x : q) row.push_back(to_string(x));
              out.push_back(std::move(row));
            }
            return out;
          },
          py::arg("ray"), py::arg("brute_force") = false)
      .def("check_json",
           [](const Instance& i, const std::string& family) {
             const auto set = parse_family(i, family);
             const auto violations = check_reductor(i, set);
             io::OrderedJson j;
             j["pass"] = violations.empty();
             j["normalised"] = is_normalised(set);
             j["violations"] = io::violations_to_json(i, violations);
             return j.dump();
           })
      .def("equiv",
           [](const Instance& i, const std::string& a, const std::string& b) {
             return linear_equivalence_witness(i, parse_family(i, a), parse_family(i, b));
           })
      .def("char_shift_json",
           [](const Instance& i, const std::string& family, const std::string& label) {
             auto set = parse_family(i, family);
             IntVector rep;
             for (const auto& x : io::Json::parse("[" + label + "]")) rep.push_back(x.get<std::int64_t>());
             return family_text(i, char_shift(i.group, set, i.group.reduce(rep)));
           })
      .def("reflect_json",
           [](const Instance& i, const std::string& family) {
             return family_text(i, reflect(i.group, parse_family(i, family)));
           })
      .def(
          "orbits",
          [](const Instance& i, std::uint64_t cap) { return orbits(i, build_catalog(i), cap); },
          py::arg("cap") = 1'000'000);
}
