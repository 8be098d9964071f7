#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "klspecht/cells.hpp"
#include "klspecht/cli.hpp"
#include "klspecht/hecke.hpp"
#include "klspecht/pairparts.hpp"
#include "klspecht/specht.hpp"

namespace py = pybind11;
using namespace klspecht;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ to_python(const Integer& c) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

std::vector<std::vector<int>> rows(const Tableau& t) { return t.rows(); }

Permutation perm(const std::vector<int>& one_line) { return Permutation(one_line); }

py::dict terms(const LaurentPoly& p) {
  py::dict d;
  for (const auto& t : p.terms()) d[py::int_(t.exp)] = to_python(t.coeff);
  return d;
}

Basis parse_basis(const std::string& name) {
  if (name == "T") return Basis::T;
  if (name == "Ttilde") return Basis::Ttilde;
  if (name == "C") return Basis::C;
  if (name == "Cprime") return Basis::Cprime;
  throw std::invalid_argument("basis must be T, Ttilde, C or Cprime");
}

py::object report(const Report& r) {
  py::dict d;
  d["claim"] = r.claim;
  d["checked"] = r.checked;
  d["passed"] = r.passed();
  d["violations"] = r.violations;
  return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_klspecht, m) {
  m.doc() = "Kazhdan-Lusztig cells, cell modules and Specht filtrations for the symmetric group";

  m.def("kl_polynomial", [](const std::vector<int>& x, const std::vector<int>& y) {
        const Permutation px = perm(x), py_ = perm(y);
        if (px.rank() != py_.rank()) throw std::invalid_argument("x and y must have the same rank");
        check_rank(px.rank());
        const LaurentPoly p = kl_table(px.rank()).P(px, py_);
        std::vector<py::int_> coeffs;
        for (const auto& t : p.terms()) {
          while (coeffs.size() < static_cast<std::size_t>(t.exp / 2)) coeffs.push_back(py::int_(0));
          coeffs.push_back(to_python(t.coeff));
        }
        return coeffs;
      },
      py::arg("x"), py::arg("y"), "Coefficients of P_{x,y} in powers of q, constant term first.");

  m.def("kl_table", [](int rank) {
        check_rank(rank);
        return to_python(kl_table(rank).to_json());
      },
      py::arg("m"), "The full KL table of S_m in its JSON form.");

  m.def("basis_element", [](const std::vector<int>& y, const std::string& basis) {
        const Permutation w = perm(y);
        check_rank(w.rank());
        const auto& kl = kl_table(w.rank());
        const Basis b = parse_basis(basis);
        const HeckeElement h = b == Basis::C ? c_basis_element(w, kl)
                                             : b == Basis::Cprime ? cprime_basis_element(w, kl)
                                                                  : change_basis(HeckeElement::basis_element(b, w), Basis::T, kl);
        const auto& G = SymmetricGroup::get(w.rank());
        py::dict out;
        for (std::size_t x : h.support()) out[py::tuple(py::cast(G.element(x).one_line()))] = terms(h[x]);
        return out;
      },
      py::arg("y"), py::arg("basis") = "C",
      "T-basis expansion {x: {power of q^(1/2): coefficient}} of C_y, C'_y, T~_y or T_y.");

  m.def("rs_insert", [](const std::vector<int>& w) {
        const auto rs = rs_insert(perm(w));
        return py::make_tuple(rows(rs.P), rows(rs.Q));
      },
      py::arg("w"), "Insertion and recording tableaux of a permutation in one-line form.");

  m.def("cells", [](int rank) {
        check_rank(rank);
        return to_python(CellStructure::get(rank).to_json());
      },
      py::arg("m"), "Left, right and two-sided cells of S_m.");

  m.def("right_cell", [](const std::vector<int>& w) {
        std::vector<std::vector<int>> out;
        for (const auto& u : right_cell_of(perm(w))) out.push_back(u.one_line());
        return out;
      },
      py::arg("w"));

  m.def("induce_cell", [](const std::vector<int>& w) { return to_python(to_json(induce_cell(right_cell_of(perm(w))))); },
        py::arg("w"), "Decomposition of C X' for the right cell of w.");
  m.def("restrict_cell", [](const std::vector<int>& w) { return to_python(to_json(restrict_cell(right_cell_of(perm(w))))); },
        py::arg("w"), "Decomposition of the right cell of w into translated cells of the smaller group.");
  m.def("induced_cell_filtration",
        [](const std::vector<int>& w) { return to_python(to_json(induced_cell_filtration(right_cell_of(perm(w))))); },
        py::arg("w"));
  m.def("restricted_cell_filtration",
        [](const std::vector<int>& w) { return to_python(to_json(restricted_cell_filtration(right_cell_of(perm(w))))); },
        py::arg("w"));

  m.def("specht_basis_size", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        const auto s = specht_basis(Composition(lambda), Composition(mu));
        if (!s.checks.passed()) throw std::runtime_error(s.checks.violations.front());
        return s.basis.size();
      },
      py::arg("lam"), py::arg("mu"));
  m.def("induced_specht_filtration", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return to_python(to_json(induced_specht_filtration(Composition(lambda), Composition(mu))));
      },
      py::arg("lam"), py::arg("mu"));
  m.def("restricted_specht_filtration", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return to_python(to_json(restricted_specht_filtration(Composition(lambda), Composition(mu))));
      },
      py::arg("lam"), py::arg("mu"));

  m.def("sequences_of_type", [](const std::vector<int>& mu) { return sequences_of_type(Composition(mu)); }, py::arg("mu"));
  m.def("w_of_sequence",
        [](const std::vector<int>& t, const std::vector<int>& mu) { return w_of_sequence(t, Composition(mu)).one_line(); },
        py::arg("t"), py::arg("mu"));
  m.def("quality_and_sharp", [](const std::vector<int>& t) {
        const auto q = quality_and_sharp(t);
        return py::make_tuple(std::vector<bool>(q.good.begin(), q.good.end()), q.sharp.parts());
      },
      py::arg("t"), "Per-position good flags and the sharp partition.");
  m.def("c_semistandard_tableaux", [](const std::vector<int>& shape, const std::vector<int>& mu) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& t : c_semistandard_tableaux(Partition(shape), Composition(mu))) out.push_back(t.rows());
        return out;
      },
      py::arg("shape"), py::arg("mu"));
  m.def("verify_pairs", [](int rank) {
        check_rank(rank);
        py::list out;
        for (const auto& r : verify_all_pairs(rank)) out.append(to_python(to_json(r)));
        return out;
      },
      py::arg("m"), "Every proven claim about sequences of type mu for every composition of m.");
  m.def("verify_parabolic_expansion", [](int n) { return report(verify_parabolic_expansion(n)); }, py::arg("n"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line interface in process; returns (exit code, stdout, stderr).");
}
