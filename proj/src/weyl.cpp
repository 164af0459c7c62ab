#include "mtheta/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mtheta::weyl {

using groups::complete_weyl;
using groups::WeylPin;

WeylElement weyl_interleaving(long l) {
    if (l < 1) throw std::invalid_argument("rank must be positive");
    std::vector<WeylPin> pins;
    for (long i = 1; i <= l; ++i) pins.push_back({i - 1, 2 * i - 2, +1});
    return complete_weyl(2 * l, pins);
}

WeylElement weyl_corner_blocks(long r, long l) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("r must be odd and at least 3");
    if (l < 1) throw std::invalid_argument("rank must be positive");
    long size = 2 * (l + r);
    std::vector<WeylPin> pins;
    for (long i = 1; i <= (r + 1) / 2; ++i) pins.push_back({i - 1, 2 * i - 2, +1});
    for (long i = 0; i <= (r - 3) / 2; ++i)
        pins.push_back({(r + 3) / 2 + i - 1, r + 2 * l + 2 * i + 2 - 1, +1});
    for (long j = 1; j <= 2 * l; ++j) pins.push_back({r + j - 1, r + j - 1, +1});
    return complete_weyl(size, pins);
}

WeylElement weyl_cusp(long alpha, long beta, long r, long n) {
    if (alpha < 1 || beta < 0 || n < 0) throw std::invalid_argument("invalid cusp parameters");
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("r must be odd and at least 3");
    long r1 = (r - 1) / 2;
    long k = 2 * alpha + beta;
    long size = 2 * n + k * (r - 1);
    long band = k * r1;  // width of the w_1 / w_2 bands
    std::vector<WeylPin> pins;
    for (long i = 1; i <= r1; ++i) {
        long row0 = alpha * (i - 1);
        long col0 = k * (i - 1);
        for (long t = 0; t < alpha; ++t) pins.push_back({row0 + t, col0 + t, +1});
    }
    for (long i = 1; i <= r1; ++i) {
        long row0 = alpha * r1 + alpha * (i - 1);
        long col0 = band + 2 * n + k * (i - 1);
        for (long t = 0; t < alpha; ++t) pins.push_back({row0 + t, col0 + t, +1});
    }
    for (long i = 1; i <= r1; ++i) {
        long row0 = alpha * (r - 1) + beta * (i - 1);
        long col0 = k * (i - 1) + alpha;
        for (long t = 0; t < beta; ++t) pins.push_back({row0 + t, col0 + t, +1});
    }
    for (long j = 0; j < 2 * n; ++j) pins.push_back({band + j, band + j, +1});
    return complete_weyl(size, pins);
}

long BlockPattern::total() const {
    long t = 0;
    for (const auto& b : blocks) t += b.size;
    return t;
}

namespace {

// Block assignment: src block index -> dst block index, matching equal
// (label, size) blocks in order.
std::vector<long> block_assignment(const BlockPattern& src, const BlockPattern& dst) {
    std::map<std::pair<std::string, long>, std::vector<long>> dst_slots;
    for (long j = 0; j < static_cast<long>(dst.blocks.size()); ++j)
        dst_slots[{dst.blocks[static_cast<size_t>(j)].label,
                   dst.blocks[static_cast<size_t>(j)].size}]
            .push_back(j);
    std::map<std::pair<std::string, long>, size_t> cursor;
    std::vector<long> assign(src.blocks.size(), -1);
    for (long i = 0; i < static_cast<long>(src.blocks.size()); ++i) {
        auto key = std::make_pair(src.blocks[static_cast<size_t>(i)].label,
                                  src.blocks[static_cast<size_t>(i)].size);
        auto it = dst_slots.find(key);
        if (it == dst_slots.end() || cursor[key] >= it->second.size())
            throw std::invalid_argument("destination pattern is not a rearrangement of the source");
        assign[static_cast<size_t>(i)] = it->second[cursor[key]++];
    }
    for (auto& [key, slots] : dst_slots)
        if (cursor[key] != slots.size())
            throw std::invalid_argument("destination pattern is not a rearrangement of the source");
    return assign;
}

std::vector<long> block_offsets(const BlockPattern& p) {
    std::vector<long> off;
    long acc = 0;
    for (const auto& b : p.blocks) {
        off.push_back(acc);
        acc += b.size;
    }
    return off;
}

}  // namespace

std::vector<long> conjugator_permutation(const BlockPattern& src, const BlockPattern& dst) {
    if (src.total() != dst.total()) throw std::invalid_argument("pattern size mismatch");
    auto assign = block_assignment(src, dst);
    auto soff = block_offsets(src);
    auto doff = block_offsets(dst);
    std::vector<long> perm(static_cast<size_t>(src.total()), -1);
    for (size_t i = 0; i < src.blocks.size(); ++i)
        for (long t = 0; t < src.blocks[i].size; ++t)
            perm[static_cast<size_t>(soff[i] + t)] = doff[static_cast<size_t>(assign[i])] + t;
    return perm;
}

long long inversion_count(const std::vector<long>& perm) {
    long long inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

long long min_inversions_brute_force(const BlockPattern& src, const BlockPattern& dst) {
    if (src.total() != dst.total()) throw std::invalid_argument("pattern size mismatch");
    std::map<std::pair<std::string, long>, std::vector<long>> groups_src, groups_dst;
    for (long i = 0; i < static_cast<long>(src.blocks.size()); ++i)
        groups_src[{src.blocks[static_cast<size_t>(i)].label,
                    src.blocks[static_cast<size_t>(i)].size}]
            .push_back(i);
    for (long j = 0; j < static_cast<long>(dst.blocks.size()); ++j)
        groups_dst[{dst.blocks[static_cast<size_t>(j)].label,
                    dst.blocks[static_cast<size_t>(j)].size}]
            .push_back(j);
    if (groups_src.size() != groups_dst.size())
        throw std::invalid_argument("destination pattern is not a rearrangement of the source");

    auto soff = [&] {
        std::vector<long> off;
        long acc = 0;
        for (const auto& b : src.blocks) {
            off.push_back(acc);
            acc += b.size;
        }
        return off;
    }();
    auto doff = [&] {
        std::vector<long> off;
        long acc = 0;
        for (const auto& b : dst.blocks) {
            off.push_back(acc);
            acc += b.size;
        }
        return off;
    }();

    std::vector<std::pair<std::vector<long>, std::vector<long>>> groups;
    for (auto& [key, sids] : groups_src) {
        auto it = groups_dst.find(key);
        if (it == groups_dst.end() || it->second.size() != sids.size())
            throw std::invalid_argument("destination pattern is not a rearrangement of the source");
        groups.push_back({sids, it->second});
    }

    long long best = -1;
    std::vector<long> assign(src.blocks.size(), -1);
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            std::vector<long> perm(static_cast<size_t>(src.total()), -1);
            for (size_t i = 0; i < src.blocks.size(); ++i)
                for (long t = 0; t < src.blocks[i].size; ++t)
                    perm[static_cast<size_t>(soff[i] + t)] =
                        doff[static_cast<size_t>(assign[i])] + t;
            long long inv = inversion_count(perm);
            if (best < 0 || inv < best) best = inv;
            return;
        }
        auto [sids, dids] = groups[gi];
        std::sort(dids.begin(), dids.end());
        do {
            for (size_t t = 0; t < sids.size(); ++t)
                assign[static_cast<size_t>(sids[t])] = dids[t];
            rec(gi + 1);
        } while (std::next_permutation(dids.begin(), dids.end()));
    };
    rec(0);
    return best;
}

WeylElement shortest_conjugator(const BlockPattern& src, const BlockPattern& dst) {
    long n = src.total();
    if (n % 2 != 0) throw std::invalid_argument("pattern total must be even");
    auto perm = conjugator_permutation(src, dst);
    for (long p = 0; p < n; ++p)
        if (perm[static_cast<size_t>(n - 1 - p)] != n - 1 - perm[static_cast<size_t>(p)])
            throw std::invalid_argument("patterns are not mirror-compatible");
    std::vector<WeylPin> pins;
    for (long p = 0; p < n; ++p) pins.push_back({perm[static_cast<size_t>(p)], p, 0});
    return groups::complete_weyl(n, pins);
}

}  // namespace mtheta::weyl
