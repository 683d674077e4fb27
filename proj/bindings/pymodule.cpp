#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biggl/biggen.hpp"
#include "biggl/capelli.hpp"
#include "biggl/checks.hpp"
#include "biggl/gridcoeff.hpp"
#include "biggl/symfunc.hpp"
#include "biggl/sympower.hpp"
#include "biggl/yangian.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace biggl;

namespace {

std::string int_str(const Int& v) { return v.str(); }

py::dict report_to_dict(const Report& rep) {
    py::dict d;
    d["command"] = rep.command;
    d["pass"] = rep.pass();
    d["checks"] = rep.checks;
    py::list items;
    for (auto& i : rep.items) {
        py::dict item;
        item["name"] = i.name;
        item["lhs"] = i.lhs;
        item["rhs"] = i.rhs;
        item["diff"] = i.diff;
        items.append(item);
    }
    d["items"] = items;
    return d;
}

Basis parse_basis(const std::string& b) {
    if (b == "P") return Basis::P;
    if (b == "M") return Basis::M;
    throw std::invalid_argument("basis must be 'P' or 'M'");
}

AlgebraKind parse_algebra(const std::string& a) {
    if (a == "gl") return AlgebraKind::GL;
    if (a == "sl") return AlgebraKind::SL;
    throw std::invalid_argument("algebra must be 'gl' or 'sl'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact models of commuting operator families on matrix-space polynomials";

    // Combinatorial helpers.
    m.def("falling_factorial",
          [](long long n, int k) { return int_str(falling_factorial(n, k)); },
          py::arg("m"), py::arg("k"));
    m.def("stirling2", [](int k, int l) { return int_str(stirling2(k, l)); }, py::arg("k"),
          py::arg("l"));
    m.def("sgn_pair", &sgn_pair, py::arg("I"), py::arg("J"));
    m.def("sgn_block", &sgn_block, py::arg("I_blocks"), py::arg("J_blocks"));
    m.def("epsilon", &epsilon, py::arg("I1"), py::arg("J1"), py::arg("I2"), py::arg("J2"));

    // Generators in canonical text form.
    m.def(
        "c_k", [](int n, int k) { return c_k(n, k).str(); }, py::arg("n"), py::arg("k"));
    m.def(
        "f_pq",
        [](int n, int r, int p, int q, bool cartan) {
            WeylOp op = f_pq(n, r, p, q);
            if (cartan) op = restrict_cartan(op, n);
            return op.str();
        },
        py::arg("n"), py::arg("r"), py::arg("p"), py::arg("q"), py::arg("cartan") = false);
    m.def(
        "m_pq",
        [](int n, int r, int p, int q, bool cartan) {
            WeylOp op = m_pq_closed(n, r, p, q);
            if (cartan) op = restrict_cartan(op, n);
            return op.str();
        },
        py::arg("n"), py::arg("r"), py::arg("p"), py::arg("q"), py::arg("cartan") = false);
    m.def(
        "capelli_generator",
        [](int n, int k, int r) { return capelli_generator(n, k, r).str(); }, py::arg("n"),
        py::arg("k"), py::arg("r"));

    // Verification grids.
    m.def(
        "check_commute",
        [](int n, int r, bool cartan) { return report_to_dict(verify_commutativity(n, r, cartan)); },
        py::arg("n"), py::arg("r"), py::arg("cartan") = true);
    m.def(
        "check_capelli", [](int n) { return report_to_dict(verify_classical_capelli(n)); },
        py::arg("n"));
    m.def(
        "check_cauchy_binet",
        [](int n, int r, int k) { return report_to_dict(verify_cauchy_binet(n, r, k)); },
        py::arg("n"), py::arg("r"), py::arg("k"));
    m.def(
        "check_charpoly",
        [](int n, int k) { return report_to_dict(verify_capelli_z_expansion(n, k, n)); },
        py::arg("n"), py::arg("k"));
    m.def(
        "check_symdet",
        [](int n, int r, int k) { return report_to_dict(verify_symdet_closed(n, r, k)); },
        py::arg("n"), py::arg("r"), py::arg("k"));
    m.def(
        "check_bethe_bridge",
        [](int n, int r, int p) { return report_to_dict(verify_bethe_bridge(n, r, p)); },
        py::arg("n"), py::arg("r"), py::arg("p"));
    m.def(
        "check_yang_baxter", [](int n) { return report_to_dict(verify_yang_baxter(n)); },
        py::arg("n"));
    m.def(
        "check_relations",
        [](int n, int m_) { return report_to_dict(relation_check_capelli_style(n, m_)); },
        py::arg("n"), py::arg("m"));
    m.def(
        "check_dhat",
        [](const std::vector<int>& alphas, int n, int m_) {
            return report_to_dict(dhat_consistency(alphas, n, m_));
        },
        py::arg("alphas"), py::arg("n"), py::arg("m"));
    m.def(
        "upsilon_rank",
        [](int n, int m_) { return report_to_dict(upsilon_injectivity_check(n, m_)); },
        py::arg("n"), py::arg("m"));

    // Symmetric-power model.
    m.def("weight_diagram", &weight_diagram, py::arg("n"), py::arg("m"));
    m.def(
        "present",
        [](int n, int m_, const std::string& basis, const std::string& algebra) {
            PresentationRing ring = present(n, m_, parse_basis(basis), parse_algebra(algebra));
            py::dict d;
            d["generators"] = ring.generators;
            py::list rels;
            for (auto& rel : ring.relations) rels.append(rel.str(PrintStyle::Plain));
            d["relations"] = rels;
            return d;
        },
        py::arg("n"), py::arg("m"), py::arg("basis") = "P", py::arg("algebra") = "gl");
    m.def(
        "theta_poly", [](int k, int N) { return theta_poly(k, N).str(); }, py::arg("k"),
        py::arg("N"));
    m.def(
        "lagrange_sum",
        [](const std::vector<long long>& pts, int k) {
            std::vector<Rat> a(pts.begin(), pts.end());
            return rat_to_string(lagrange_sum(a, k));
        },
        py::arg("points"), py::arg("k"));
}
