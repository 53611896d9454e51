#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bruhat/orders.hpp"
#include "bruhat/partition.hpp"
#include "bruhat/perm.hpp"
#include "bruhat/polyring.hpp"
#include "bruhat/schubert.hpp"
#include "bruhat/tableaux.hpp"
#include "bruhat/verify.hpp"

namespace py = pybind11;
using namespace bruhat;

namespace {

std::map<std::string, Coeff> as_dict(const SchubertExpansion& e) {
    std::map<std::string, Coeff> out;
    for (const auto& [w, c] : e.coeffs()) out[to_string(w)] = c;
    return out;
}

Partition as_partition(const std::vector<int>& parts) {
    return Partition(parts);
}

VerificationReport run_check(const std::string& check, int n, std::uint64_t seed) {
    if (check == "A") return verify_theorem_A(n);
    if (check == "B") return verify_theorem_B(50, seed);
    if (check == "C") return verify_theorem_C(n);
    if (check == "D") return verify_theorem_D(n);
    if (check == "sym") return verify_symmetries(n);
    if (check == "chains") return verify_prop_chains(n);
    if (check == "pieri") return verify_pieri(n);
    if (check == "subst") return verify_substitution_all(n, {1, 3});
    throw DomainError("unknown check '" + check + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Schubert polynomials and Bruhat-order combinatorics";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<>())
        .def(py::init([](const std::string& s) { return parse_permutation(s); }))
        .def(py::init([](const std::vector<int>& v) { return Permutation(v); }))
        .def("__call__", &Permutation::operator())
        .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
        .def("__hash__", [](const Permutation& w) { return py::hash(py::str(to_string(w))); })
        .def("__str__", [](const Permutation& w) { return to_string(w); })
        .def("__repr__", [](const Permutation& w) { return "Permutation('" + to_string(w) + "')"; })
        .def("inverse", &Permutation::inverse)
        .def("one_line", [](const Permutation& w, int n) { return to_string(w, n); }, py::arg("n") = 0)
        .def("cycles", &cycle_string)
        .def("length", &length)
        .def("code", &lehmer_code)
        .def("size", &Permutation::size);
    py::implicitly_convertible<std::string, Permutation>();
    py::implicitly_convertible<std::vector<int>, Permutation>();

    m.def("schubert", [](const Permutation& w) { return to_string(schubert_poly(w)); },
          "Schubert polynomial as text");
    m.def("expand", [](const std::string& f) { return as_dict(expand_in_schubert_basis(parse_polynomial(f))); },
          "expand a polynomial in the Schubert basis");
    m.def("product", [](const Permutation& u, const Permutation& v) { return as_dict(product_expansion(u, v)); });
    m.def("structure_constant", &structure_constant, py::arg("u"), py::arg("v"), py::arg("w"));
    m.def("lr_coeff", [](const Permutation& z, const std::vector<int>& lam) { return lr_coeff_perm(z, as_partition(lam)); },
          py::arg("zeta"), py::arg("lam"));
    m.def("lr_vector", [](const Permutation& z) {
        std::vector<std::pair<std::vector<int>, Coeff>> out;
        for (const auto& [lam, c] : lr_vector(z)) out.emplace_back(lam.parts(), c);
        return out;
    });
    m.def("psi_p", [](const Permutation& w, int p) { return as_dict(psi_p(w, p)); });

    m.def("bruhat_leq", &bruhat_leq);
    m.def("k_bruhat_leq", &k_bruhat_leq, py::arg("u"), py::arg("w"), py::arg("k"));
    m.def("count_chains", [](const Permutation& u, const Permutation& w, int k) {
        return count_maximal_chains(interval_k(u, w, k));
    }, py::arg("u"), py::arg("w"), py::arg("k"));
    m.def("chain_words", [](const Permutation& u, const Permutation& w, int k) { return chain_words(interval_k(u, w, k)); },
          py::arg("u"), py::arg("w"), py::arg("k"));
    m.def("interval_dot", [](const Permutation& u, const Permutation& w, int k) { return dot_export(interval_k(u, w, k)); },
          py::arg("u"), py::arg("w"), py::arg("k"));
    m.def("coloured_chain_count", &coloured_chain_count, py::arg("u"), py::arg("w"), py::arg("I"));

    m.def("cyclic_shift", &cyclic_shift, py::arg("zeta"), py::arg("n"));
    m.def("shape_equivalent", &shape_equivalent);
    m.def("is_disjoint", &is_disjoint);
    m.def("grassmannian", [](const std::vector<int>& lam, int k) { return grassmannian(as_partition(lam), k); });

    m.def("f_lambda", [](const std::vector<int>& lam) { return f_lambda(as_partition(lam)); });
    m.def("lrc", [](const std::vector<int>& mu, const std::vector<int>& nu, const std::vector<int>& lam) {
        return lrc_classical(as_partition(mu), as_partition(nu), as_partition(lam));
    });

    m.def("census", [](int n) {
        const auto c = skew_census(n);
        return py::make_tuple(c.skew_partitions, c.shape_equivalent, c.skew_permutations);
    });
    m.def("verify", [](const std::string& check, int n, std::uint64_t seed) {
        const auto rep = run_check(check, n, seed);
        return py::make_tuple(rep.passed(), rep.json());
    }, py::arg("check"), py::arg("n") = 4, py::arg("seed") = 20261019,
          "run one identity check; returns (passed, json report)");
}
