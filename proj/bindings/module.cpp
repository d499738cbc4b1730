#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "conjucirc/circuit.hpp"
#include "conjucirc/haar.hpp"
#include "conjucirc/performance.hpp"
#include "conjucirc/permutation.hpp"
#include "conjucirc/schur_weyl.hpp"
#include "conjucirc/young.hpp"

namespace py = pybind11;
using namespace conjucirc;

namespace {

py::object to_fraction(const Rational& r) {
    std::ostringstream os;
    os << r;
    return py::module_::import("fractions").attr("Fraction")(os.str());
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Optimal circuits for unitary complex conjugation";

    // --- combinatorics ---
    m.def(
        "partitions",
        [](int n, int max_height) {
            std::vector<std::vector<int>> out;
            for (const Partition& p : partitions(n, max_height))
                out.push_back(p.parts);
            return out;
        },
        py::arg("n"), py::arg("max_height"),
        "All partitions of n with height <= max_height, lexicographically "
        "descending.");
    m.def(
        "irrep_dim",
        [](const std::vector<int>& parts) {
            return py::module_::import("builtins").attr("int")(
                irrep_dim(to_partition(parts)).str());
        },
        py::arg("partition"));
    m.def(
        "multiplicity",
        [](const std::vector<int>& parts, int d) {
            return py::module_::import("builtins").attr("int")(
                multiplicity(to_partition(parts), d).str());
        },
        py::arg("partition"), py::arg("d"));
    m.def(
        "step_representation",
        [](const std::vector<int>& parts) {
            return step_representation(to_partition(parts)).pairs;
        },
        py::arg("partition"));
    m.def(
        "c_lambda",
        [](const std::vector<int>& parts, int d) {
            return to_fraction(c_lambda_closed(to_partition(parts), d));
        },
        py::arg("partition"), py::arg("d"),
        "c(lambda) in closed form, as an exact Fraction.");
    m.def(
        "c_lambda_brute",
        [](const std::vector<int>& parts, int d) {
            return to_fraction(c_lambda_brute(to_partition(parts), d));
        },
        py::arg("partition"), py::arg("d"));
    m.def(
        "vershik_sum",
        [](const std::vector<int>& parts) {
            return to_fraction(vershik_sum(to_partition(parts)));
        },
        py::arg("partition"));
    m.def(
        "max_c",
        [](int n, int d) {
            auto r = max_c(n, d);
            std::vector<std::vector<int>> maximizers;
            for (const Partition& p : r.maximizers) maximizers.push_back(p.parts);
            return py::make_tuple(maximizers, to_fraction(r.value));
        },
        py::arg("n"), py::arg("d"));

    // --- symmetric group and Schur-Weyl ---
    m.def(
        "perm_operator",
        [](const std::vector<int>& images, int d) {
            return perm_operator(Permutation(images), d);
        },
        py::arg("images"), py::arg("d"));
    m.def(
        "perm_sign",
        [](const std::vector<int>& images) { return sign(Permutation(images)); },
        py::arg("images"));
    m.def("antisym_projector", &antisym_projector, py::arg("d"), py::arg("n"));
    m.def(
        "antisym_basis",
        [](int d, int n) {
            std::vector<CVector> basis = antisym_basis(d, n);
            return basis;
        },
        py::arg("d"), py::arg("n"));
    m.def(
        "matrix_unit",
        [](const std::vector<int>& parts, int i, int j, int d) {
            return matrix_unit(to_partition(parts), i, j, d);
        },
        py::arg("partition"), py::arg("i"), py::arg("j"), py::arg("d"));
    m.def(
        "young_projector",
        [](const std::vector<int>& parts, int d) {
            return young_projector(to_partition(parts), d);
        },
        py::arg("partition"), py::arg("d"));
    m.def(
        "young_orthogonal_rep",
        [](const std::vector<int>& parts, const std::vector<int>& images) {
            return young_orthogonal_rep(to_partition(parts), Permutation(images))
                .data;
        },
        py::arg("partition"), py::arg("permutation_images"));
    m.def(
        "standard_tableaux",
        [](const std::vector<int>& parts) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const auto& t : standard_tableaux(to_partition(parts)))
                out.push_back(t.rows);
            return out;
        },
        py::arg("partition"),
        "Tableaux in last-letter order, as row lists.");

    // --- circuit ---
    m.def("haar_unitary",
          [](int d, std::uint64_t seed) { return haar_unitary(d, seed); },
          py::arg("d"), py::arg("seed"));
    m.def("su_normalize", &su_normalize, py::arg("u"));
    m.def(
        "encoder",
        [](int d, int k) {
            auto enc = encoder(d, k);
            return py::make_tuple(enc.choi.matrix, enc.kraus.operators);
        },
        py::arg("d"), py::arg("k"),
        "Encoder as (Choi matrix on P(x)I, Kraus operators).");
    m.def(
        "decoder",
        [](int d, int k) {
            auto dec = decoder(d, k);
            return py::make_tuple(dec.choi.matrix, dec.kraus.operators);
        },
        py::arg("d"), py::arg("k"),
        "Decoder (maximally mixed sigma) as (Choi matrix on O(x)F, Kraus "
        "operators).");
    m.def("exact_conjugation_isometry", &exact_conjugation_isometry, py::arg("d"));
    m.def(
        "apply_circuit",
        [](int d, int k, const CMatrix& u) { return apply_circuit(d, k, u).matrix; },
        py::arg("d"), py::arg("k"), py::arg("u"),
        "Choi matrix of the output channel D o U^k o E.");
    m.def(
        "channel_fidelity",
        [](const CMatrix& choi, const CMatrix& u) {
            int d = static_cast<int>(u.rows());
            return channel_fidelity(
                ChoiOperator{choi, SubsystemShape{d}, SubsystemShape{d}}, u);
        },
        py::arg("choi"), py::arg("u"));
    m.def("conjugation_fidelity", &conjugation_fidelity, py::arg("d"), py::arg("k"),
          py::arg("u"));
    m.def("theory_fidelity", &theory_fidelity, py::arg("d"), py::arg("k"),
          "(k+1)/(d(d-k))");
    m.def(
        "inversion_simulation",
        [](int d, int k, const CMatrix& u, long samples, std::uint64_t seed) {
            auto r = inversion_simulation(d, k, u, samples, seed);
            py::dict out;
            out["success_rate"] = r.success_rate;
            out["conditional_fidelity"] = r.conditional_fidelity;
            out["successes"] = r.successes;
            out["samples"] = r.samples;
            return out;
        },
        py::arg("d"), py::arg("k"), py::arg("u"), py::arg("samples"),
        py::arg("seed"));

    // --- performance and certificate ---
    m.def("commutant_basis", &commutant_basis, py::arg("d"), py::arg("n"));
    m.def("performance_operator",
          [](int d, int k) { return performance_operator(d, k); }, py::arg("d"),
          py::arg("k"));
    m.def(
        "optimal_superchannel",
        [](int d, int k) { return optimal_superchannel(d, k).matrix; },
        py::arg("d"), py::arg("k"), "S = E (x) D on P (x) I (x) O (x) F.");
    m.def(
        "dual_operator",
        [](int d, int k) {
            auto dual = dual_operator(d, k);
            return py::make_tuple(dual.matrix, to_fraction(dual.constant_c));
        },
        py::arg("d"), py::arg("k"), "(S-hat, exact constant c).");
    m.def(
        "certify",
        [](int d, int k, double tol) {
            auto r = certify(d, k, tol);
            py::dict out;
            out["d"] = r.d;
            out["k"] = r.k;
            out["primal_value"] = r.primal_value;
            out["dual_c"] = to_fraction(r.dual_c);
            out["min_eig_gap"] = r.min_eig_gap;
            out["eigengap_computed"] = r.eigengap_computed;
            py::dict residuals;
            for (const auto& [name, value] : r.feasibility_residuals)
                residuals[py::str(name)] = value;
            out["feasibility_residuals"] = residuals;
            out["tol"] = r.tolerance;
            out["valid"] = r.valid;
            return out;
        },
        py::arg("d"), py::arg("k"), py::arg("tol") = 1e-9);
    m.def(
        "mc_average_fidelity",
        [](int d, int k, long samples, std::uint64_t seed) {
            auto r = mc_average_fidelity(d, k, samples, seed);
            return py::make_tuple(r.mean, r.stderr_);
        },
        py::arg("d"), py::arg("k"), py::arg("samples"), py::arg("seed"));
}
