#include "mtheta/unipotent.hpp"

namespace mtheta::unipotent {

std::vector<RootPosition> positive_root_positions(long two_l) {
    if (two_l % 2 != 0 || two_l <= 0) throw std::invalid_argument("ambient size must be even");
    std::vector<RootPosition> out;
    for (long i = 1; i <= two_l; ++i)
        for (long j = i + 1; j <= two_l; ++j) {
            if (i + j == two_l + 1) {
                out.push_back({i, j, RootKind::Long});
            } else if (i < two_l + 1 - j) {
                // canonical representative of the pair {(i,j), (2l+1-j, 2l+1-i)}
                out.push_back({i, j, RootKind::Short});
            }
        }
    return out;
}

std::vector<RootPosition> u_root_positions(const UabcShape& s) {
    std::vector<RootPosition> out;
    for (const auto& r : positive_root_positions(s.ambient()))
        if (s.levi_block(r.i) < s.levi_block(r.j)) out.push_back(r);
    return out;
}

}  // namespace mtheta::unipotent
