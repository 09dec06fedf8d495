#pragma once

#include "arraudit/core.hpp"

#include <map>
#include <set>

namespace testutil {

using SmallTVector = std::map<long long, long long>;

/// Independent brute-force solver for Sigma t_r * r(r-1)/2 = total over
/// 2 <= r <= cap: plain recursion ascending in r trying every affordable
/// count, sharing nothing with the production enumerator.
inline void oracle_collect(long long total, long long r, long long cap, SmallTVector& current,
                           std::set<SmallTVector>& out) {
    if (r > cap) {
        if (total == 0) {
            out.insert(current);
        }
        return;
    }
    const long long weight = r * (r - 1) / 2;
    for (long long count = 0; count * weight <= total; ++count) {
        if (count > 0) {
            current[r] = count;
        }
        oracle_collect(total - count * weight, r + 1, cap, current, out);
    }
    current.erase(r);
}

inline std::set<SmallTVector> oracle_tvectors(long long total, long long cap) {
    std::set<SmallTVector> out;
    SmallTVector current;
    oracle_collect(total, 2, cap, current, out);
    return out;
}

inline SmallTVector to_small(const arraudit::TVector& t) {
    SmallTVector small;
    for (const auto& [r, c] : t.counts()) {
        small[static_cast<long long>(r)] = static_cast<long long>(c);
    }
    return small;
}

} // namespace testutil
