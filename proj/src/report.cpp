#include "mtheta/report.hpp"

#include <algorithm>
#include <sstream>

namespace mtheta::report {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

json Report::to_json() const {
    json out;
    out["command"] = command;
    out["params"] = params.is_null() ? json::object() : params;
    out["conventions"] = conventions.is_null() ? json::object() : conventions;
    std::vector<CheckRecord> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    out["checks"] = json::array();
    for (const auto& c : sorted) {
        json rec;
        rec["name"] = c.name;
        rec["status"] = c.status;
        if (!c.witness.is_null()) rec["witness"] = c.witness;
        out["checks"].push_back(rec);
    }
    out["seed"] = seed;
    return out;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    if (!params.is_null() && !params.empty()) os << "params: " << params.dump() << "\n";
    os << "seed: " << seed << "\n";
    std::vector<CheckRecord> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    long pass = 0, fail = 0, skip = 0;
    for (const auto& c : sorted) {
        os << "  [" << c.status << "] " << c.name;
        if (!c.witness.is_null()) os << "  " << c.witness.dump();
        os << "\n";
        if (c.status == "pass") ++pass;
        else if (c.status == "fail") ++fail;
        else ++skip;
    }
    os << (fail == 0 ? "OK" : "FAILED") << " (" << pass << " passed, " << fail << " failed, "
       << skip << " skipped)\n";
    return os.str();
}

json conventions() {
    json c;
    c["mu_r_embedding"] =
        "mu_r inside F_p^x is identified with Z/rZ through g^((p-1)/r), g the smallest "
        "primitive root mod p";
    c["torus_cocycle"] = "sigma(s,t) = prod_{i<j} (s_i, t_j)_r^{-1} on diagonal torus elements";
    c["gk_dim"] =
        "generic conventions: n^2 for the symplectic member, the maximal-unipotent dimension "
        "for the orthogonal member, nk for the Weil member";
    c["heisenberg_projection"] =
        "rows of Y are read bottom-up; first halves fill X, weighted second halves fill Y, "
        "z = (1/2) tr of the weighted Z (middle weight 2 for odd block size)";
    return c;
}

}  // namespace mtheta::report
