#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mtheta/cocycle.hpp"
#include "mtheta/orbits.hpp"
#include "mtheta/verify.hpp"

namespace py = pybind11;

namespace {

using mtheta::orbits::CoveredFamily;
using mtheta::orbits::OrbitComparison;
using mtheta::orbits::Partition;
using mtheta::scalars::PAdic;
using mtheta::scalars::Rat;

std::string rat_str(const Rat& q) { return mtheta::scalars::to_string(q); }

Rat parse_rat(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

std::string dominance_str(const Partition& a, const Partition& b) {
    switch (mtheta::orbits::dominance(a, b)) {
        case OrbitComparison::Less: return "less";
        case OrbitComparison::Greater: return "greater";
        case OrbitComparison::Equal: return "equal";
        case OrbitComparison::Incomparable: return "incomparable";
    }
    return "";
}

std::string dual_group_str(const std::string& family, long size, long r) {
    CoveredFamily fam;
    if (family == "Sp")
        fam = CoveredFamily::Sp;
    else if (family == "SO")
        fam = size % 2 == 1 ? CoveredFamily::SOodd : CoveredFamily::SOeven;
    else
        throw std::invalid_argument("family must be Sp or SO");
    auto d = mtheta::orbits::dual_group(fam, size, r);
    return (d.family == mtheta::orbits::DualFamily::SO ? "SO_" : "Sp_") +
           std::to_string(d.size) + "(C)";
}

py::dict hilbert(const std::string& a, const std::string& b, long p, long r) {
    auto pa = PAdic::from_rational(parse_rat(a), p);
    auto pb = PAdic::from_rational(parse_rat(b), p);
    auto sym = mtheta::cocycle::hilbert_tame(pa, pb, p, r);
    auto val = mtheta::cocycle::hilbert_tame_value(pa, pb, p, r);
    py::dict out;
    out["exponent"] = sym.exponent();
    out["order"] = sym.order();
    out["value_mod_p"] = val.residue();
    return out;
}

}  // namespace

PYBIND11_MODULE(_mtheta, m) {
    m.doc() = "exact arithmetic for the matrix groups, orbits, characters, and cocycles of "
              "the higher theta-lift construction";

    m.def("o_c", &mtheta::orbits::o_c, py::arg("r"), py::arg("twol"),
          "conjectured orbit partition attached to (r, 2l)");
    m.def("is_symplectic_partition", &mtheta::orbits::is_symplectic_partition,
          py::arg("parts"), py::arg("two_n"));
    m.def("dominance", &dominance_str, py::arg("lhs"), py::arg("rhs"),
          "partial-sum dominance verdict: less/greater/equal/incomparable");
    m.def("orbit_dim", &mtheta::orbits::orbit_dim, py::arg("parts"), py::arg("two_n"));
    m.def("centralizer_dim_oracle", &mtheta::orbits::centralizer_dim_oracle, py::arg("parts"),
          py::arg("two_n"));
    m.def(
        "gk_dim",
        [](const Partition& parts, long two_n) {
            return rat_str(mtheta::orbits::gk_dim(parts, two_n));
        },
        py::arg("parts"), py::arg("two_n"));
    m.def(
        "dimension_equation",
        [](long r, long k, long n) {
            auto [lhs, rhs] = mtheta::orbits::dimension_equation(r, k, n);
            return py::make_tuple(rat_str(lhs), rat_str(rhs));
        },
        py::arg("r"), py::arg("k"), py::arg("n"));
    m.def("dual_group", &dual_group_str, py::arg("family"), py::arg("size"), py::arg("r"));
    m.def("hilbert_tame", &hilbert, py::arg("a"), py::arg("b"), py::arg("p"), py::arg("r"),
          "tame Hilbert symbol of two rationals, given as strings like '49/3'");
    m.def(
        "borel_modulus_exponent",
        [](const std::vector<long>& pattern, long rank) {
            return mtheta::groups::borel_modulus_exponent(pattern, rank);
        },
        py::arg("pattern"), py::arg("rank"));
    m.def(
        "verify",
        [](const std::string& suite, long p, std::uint64_t seed, long iters) {
            return mtheta::verify::run_suite(suite, p, seed, iters).to_json().dump();
        },
        py::arg("suite"), py::arg("p") = 7, py::arg("seed") = 0, py::arg("iters") = 50,
        "run an invariant suite and return the JSON report as a string");
}
