#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "asc/bounds.hpp"
#include "asc/channel.hpp"
#include "asc/code_io.hpp"
#include "asc/codes.hpp"
#include "asc/decoder.hpp"
#include "asc/finite_field.hpp"
#include "asc/subspace.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace asc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Analog subspace codes: Grassmannian distances, CP codes, channels and bounds";

  py::register_exception<Error>(m, "Error");

  py::enum_<Field>(m, "Field").value("Real", Field::Real).value("Complex", Field::Complex);

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_static("for_trial", &Rng::for_trial, py::arg("master"), py::arg("index"));

  py::class_<Subspace>(m, "Subspace")
      .def(py::init<Index, Field>(), py::arg("ambient_dim"), py::arg("field") = Field::Complex)
      .def_static("from_orthonormal", &Subspace::from_orthonormal, py::arg("basis"), py::arg("field"))
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("field", &Subspace::field)
      .def_property_readonly("basis", [](const Subspace& s) { return Matrix(s.basis()); })
      .def("__repr__", [](const Subspace& s) {
        return "<Subspace dim=" + std::to_string(s.dim()) + " of " + std::to_string(s.ambient_dim()) + ">";
      });

  m.def("orthonormalize", py::overload_cast<const Matrix&>(&orthonormalize), py::arg("raw"));
  m.def("orthonormalize", py::overload_cast<const Matrix&, Field>(&orthonormalize), py::arg("raw"), py::arg("field"));
  m.def("projection", [](const Subspace& u) { return projection_of(u).matrix; });
  m.def("distance", &distance);
  m.def("distance_via_gram", &distance_via_gram);
  m.def("chordal_distance", &chordal_distance);
  m.def("principal_angles", &principal_angles);
  m.def("complement", &complement);
  m.def("subspace_sum", &subspace_sum);
  m.def("direct_sum", &direct_sum);
  m.def("random_subspace", &random_subspace, py::arg("n"), py::arg("m"), py::arg("field"), py::arg("rng"));
  m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("field"), py::arg("rng"));
  m.def("transform", &transform);

  py::class_<FiniteField, std::shared_ptr<FiniteField>>(m, "FiniteField")
      .def_static("of_order", [](std::uint32_t q) { return std::const_pointer_cast<FiniteField>(FiniteField::of_order(q)); })
      .def_property_readonly("characteristic", &FiniteField::characteristic)
      .def_property_readonly("degree", &FiniteField::degree)
      .def_property_readonly("order", &FiniteField::order)
      .def_property_readonly("modulus", &FiniteField::modulus)
      .def("add", &FiniteField::add)
      .def("sub", &FiniteField::sub)
      .def("mul", &FiniteField::mul)
      .def("inv", &FiniteField::inv)
      .def("pow", &FiniteField::pow)
      .def("trace", &FiniteField::trace)
      .def("character", &FiniteField::character, py::arg("j"), py::arg("a"));

  m.def("weil_sum", [](std::uint32_t q, std::vector<FiniteField::Elem> coeffs, FiniteField::Elem j) {
    const auto f = FiniteField::of_order(q);
    return weil_sum(FieldPolynomial(f, std::move(coeffs)), FieldElement(f, j));
  }, py::arg("q"), py::arg("coefficients"), py::arg("chi_index") = 1);
  m.def("weil_bound", &weil_bound);
  m.def("is_prime", &is_prime);
  m.def("largest_prime_below", &largest_prime_below);

  py::class_<SubspaceCode>(m, "SubspaceCode")
      .def(py::init<Index, Field, std::vector<Subspace>>(), py::arg("ambient_dim"), py::arg("field"),
           py::arg("codewords"))
      .def_property_readonly("ambient_dim", &SubspaceCode::ambient_dim)
      .def_property_readonly("field", &SubspaceCode::field)
      .def("__len__", &SubspaceCode::size)
      .def("__getitem__", [](const SubspaceCode& c, std::size_t i) { return c[i]; })
      .def("min_distance", [](SubspaceCode& c) { return min_distance_exhaustive(c).distance; })
      .def("to_json", &code_to_json)
      .def_static("from_json", &code_from_json);

  py::class_<CodeParameters>(m, "CodeParameters")
      .def_readonly("n", &CodeParameters::n)
      .def_readonly("l", &CodeParameters::l)
      .def_readonly("size", &CodeParameters::size)
      .def_readonly("min_distance", &CodeParameters::min_distance)
      .def_readonly("normalized_weight", &CodeParameters::normalized_weight)
      .def_readonly("rate", &CodeParameters::rate)
      .def_readonly("normalized_distance", &CodeParameters::normalized_distance);
  m.def("code_parameters", [](SubspaceCode& c) { return code_parameters(c); });

  m.def("cp_construct", [](std::uint32_t q, std::uint32_t k, FiniteField::Elem chi) {
    return cp_construct(CPCodeSpec(FiniteField::of_order(q), k, chi));
  }, py::arg("q"), py::arg("k"), py::arg("chi") = 1);
  m.def("cp_monomial_set", [](std::uint32_t q, std::uint32_t k) {
    return cp_monomial_set(CPCodeSpec(FiniteField::of_order(q), k));
  });
  m.def("cp_distance_bound", py::overload_cast<std::uint32_t, std::uint32_t>(&cp_distance_bound));
  m.def("cp_simplified_bound", &cp_simplified_bound);
  m.def("cp_max_k_for_delta", &cp_max_k_for_delta);
  m.def("binary_to_lines", &binary_to_lines);
  m.def("random_ensemble_code", [](Index n, Index dim, std::size_t count, Field f, Rng& rng) {
    return random_ensemble_code(n, dim, count, f, rng);
  }, py::arg("n"), py::arg("m"), py::arg("count"), py::arg("field"), py::arg("rng"));
  m.def("dual_code", &dual_code);
  m.def("complex_to_real_double", &complex_to_real_double);

  py::class_<ChannelOutput>(m, "ChannelOutput")
      .def_readonly("received", &ChannelOutput::received)
      .def_readonly("rho", &ChannelOutput::rho)
      .def_readonly("t", &ChannelOutput::t);
  py::class_<NoisyChannelOutput>(m, "NoisyChannelOutput")
      .def_readonly("received", &NoisyChannelOutput::received)
      .def_readonly("rho", &NoisyChannelOutput::rho)
      .def_readonly("t", &NoisyChannelOutput::t)
      .def_readonly("realized_rotation", &NoisyChannelOutput::realized_rotation)
      .def_readonly("r_d", &NoisyChannelOutput::r_d);
  m.def("erase", &erase);
  m.def("random_error_subspace", &random_error_subspace);
  m.def("rotate", &rotate);
  m.def("apply_operator_channel", [](const Subspace& u, Index k, Index t, Rng& rng) {
    return apply_operator_channel(u, {k, t}, rng);
  }, py::arg("u"), py::arg("k"), py::arg("t"), py::arg("rng"));
  m.def("apply_noisy_operator_channel", [](const Subspace& u, Index k, Index t, double delta, Index r_d, Rng& rng) {
    return apply_noisy_operator_channel(u, {{k, t}, delta, r_d}, rng);
  }, py::arg("u"), py::arg("k"), py::arg("t"), py::arg("delta"), py::arg("r_d"), py::arg("rng"));
  m.def("rq_factorize", [](const Matrix& a) {
    auto f = rq_factorize(a);
    return py::make_tuple(f.r, f.q);
  });
  m.def("perturbation_bound", [](const Matrix& a, const Matrix& n) {
    auto b = perturbation_bound(a, n);
    return py::make_tuple(b.epsilon, b.bound);
  });
  m.def("general_perturbation_bound", [](const Matrix& a, const Matrix& n) {
    auto b = general_perturbation_bound(a, n);
    return py::dict(py::arg("r_d") = b.r_d, py::arg("epsilon") = b.epsilon, py::arg("delta") = b.delta,
                    py::arg("total") = b.total, py::arg("selected_rows") = b.selected_rows);
  });

  py::class_<DecodeResult>(m, "DecodeResult")
      .def_readonly("codeword_index", &DecodeResult::codeword_index)
      .def_readonly("distance_to_received", &DecodeResult::distance_to_received)
      .def_readonly("runner_up_distance", &DecodeResult::runner_up_distance)
      .def_readonly("unique", &DecodeResult::unique);
  m.def("decode", &decode);
  m.def("guarantee_noiseless", &guarantee_noiseless);
  m.def("guarantee_chordal", &guarantee_chordal);
  m.def("guarantee_noisy", &guarantee_noisy);

  m.def("barg_lower", &barg_lower, py::arg("m"), py::arg("delta"), py::arg("beta"));
  m.def("barg_upper", &barg_upper, py::arg("m"), py::arg("delta"), py::arg("beta"));
  m.def("shannon_lower", &shannon_lower);
  m.def("random_coding_rate", &random_coding_rate, py::arg("m"), py::arg("delta"), py::arg("beta"), py::arg("eps"));
  m.def("binary_entropy", &binary_entropy);
  m.def("gv_binary_delta", &gv_binary_delta);
  m.def("zyablov_delta", &zyablov_delta);
  m.def("zyablov_rate", &zyablov_rate);
  m.def("blokh_zyablov_rate", &blokh_zyablov_rate);

  m.def("run_cli", [](std::vector<std::string> args) {
    std::vector<const char*> argv = {"asc"};
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(rc, out.str(), err.str());
  }, py::arg("args"), "Run an `asc` subcommand in-process; returns (exit_code, stdout, stderr).");
}
