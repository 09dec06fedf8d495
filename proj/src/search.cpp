#include "arraudit/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace arraudit {

namespace {

/// Largest r with C(r,2) <= budget (r >= 2), so the DFS never starts above
/// the first level that can hold a point at all.
Integer max_multiplicity_within(const Integer& budget) {
    // r(r-1)/2 <= budget  <=>  r <= (1 + sqrt(1 + 8 budget)) / 2
    const Integer discriminant = 8 * budget + 1;
    Integer r = (1 + sqrt(discriminant)) / 2;
    while (choose2(r + 1) <= budget) {
        ++r;
    }
    while (r > 2 && choose2(r) > budget) {
        --r;
    }
    return r;
}

bool dfs(const Integer& r, const Integer& budget, TVector& current,
         const std::function<bool(const TVector&)>& visit) {
    if (r == 2) {
        current.set(2, budget);
        const bool keep_going = visit(current);
        current.set(2, 0);
        return keep_going;
    }
    const Integer weight = choose2(r);
    for (Integer count = budget / weight; count >= 0; --count) {
        current.set(r, count);
        if (!dfs(r - 1, budget - count * weight, current, visit)) {
            current.set(r, 0);
            return false;
        }
    }
    current.set(r, 0);
    return true;
}

} // namespace

void enumerate_tvectors(const Integer& pair_total, const Integer& r_cap,
                        const std::function<bool(const TVector&)>& visit) {
    if (pair_total < 0) {
        throw std::invalid_argument("pair total must be >= 0, got " + to_string(pair_total));
    }
    if (r_cap < 2) {
        throw std::invalid_argument("multiplicity cap must be >= 2, got " + to_string(r_cap));
    }
    if (pair_total == 0) {
        visit(TVector{});
        return;
    }
    TVector current;
    dfs(std::min(r_cap, max_multiplicity_within(pair_total)), pair_total, current, visit);
}

std::vector<TVector> enumerate_tvectors(const Integer& pair_total, const Integer& r_cap) {
    std::vector<TVector> out;
    enumerate_tvectors(pair_total, r_cap, [&out](const TVector& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

SearchSpec SearchSpec::lines(const Integer& k) {
    SearchSpec spec;
    spec.mode = SearchMode::Lines;
    spec.d = 1;
    spec.k = k;
    return spec;
}

SearchSpec SearchSpec::equal_degree(const Integer& d, const Integer& k) {
    SearchSpec spec;
    spec.mode = SearchMode::EqualDegree;
    spec.d = d;
    spec.k = k;
    return spec;
}

SearchSpec SearchSpec::line_conic(const Integer& l, const Integer& k) {
    SearchSpec spec;
    spec.mode = SearchMode::LineConic;
    spec.l = l;
    spec.k = k;
    return spec;
}

ComponentSpec SearchSpec::components() const {
    switch (mode) {
        case SearchMode::Lines: return ComponentSpec::lines(k);
        case SearchMode::EqualDegree: return ComponentSpec::equal_degree(d, k);
        case SearchMode::LineConic: return ComponentSpec::line_conic(l, k);
    }
    throw std::logic_error("unreachable search mode");
}

Integer SearchSpec::pair_total() const {
    switch (mode) {
        case SearchMode::Lines: return choose2(k);
        case SearchMode::EqualDegree: return d * d * choose2(k);
        case SearchMode::LineConic: return choose2(l) + 4 * choose2(k) + 2 * k * l;
    }
    throw std::logic_error("unreachable search mode");
}

namespace {

/// Filters whose hypothesis includes t_r = 0 for 3r > 2D.
bool has_multiplicity_gate(InequalityKind kind) {
    switch (kind) {
        case InequalityKind::LangerLines:
        case InequalityKind::LineConic:
        case InequalityKind::LineConicParam:
        case InequalityKind::EqualDegree:
        case InequalityKind::EqualDegreeParam:
            return true;
        default:
            return false;
    }
}

std::vector<InequalityKind> canonical_filters(std::vector<InequalityKind> filters) {
    std::sort(filters.begin(), filters.end());
    filters.erase(std::unique(filters.begin(), filters.end()), filters.end());
    return filters;
}

} // namespace

Integer SearchSpec::effective_r_cap() const {
    const Integer total = components().total_degree();
    Integer cap = total;
    if (policy == FilterPolicy::RequireApplicable) {
        for (const auto kind : filters) {
            if (has_multiplicity_gate(kind)) {
                cap = std::min(cap, Integer(2 * total / 3));
                break;
            }
        }
    }
    if (r_cap) {
        if (*r_cap < 2) {
            throw std::invalid_argument("multiplicity cap must be >= 2, got " + to_string(*r_cap));
        }
        cap = std::min(cap, *r_cap);
    }
    return std::max(cap, Integer(2));
}

SearchResult search_feasible(const SearchSpec& spec) {
    return search_feasible(spec, [](const ArrangementClass&) {});
}

SearchResult search_feasible(const SearchSpec& spec,
                             const std::function<void(const ArrangementClass&)>& on_survivor) {
    const ComponentSpec components = spec.components();
    const std::vector<InequalityKind> filters = canonical_filters(spec.filters);
    const Integer cap = spec.effective_r_cap();

    SearchResult result;
    enumerate_tvectors(spec.pair_total(), cap, [&](const TVector& t) {
        ArrangementClass candidate{components, t};
        if (!validate_identity(candidate)) {
            throw std::logic_error("enumerated t-vector breaks the pair-count identity");
        }
        result.examined += 1;

        for (const auto kind : filters) {
            const InequalityReport report = run_check(candidate, kind);
            const bool killed = report.violated() ||
                                (!report.applicable &&
                                 spec.policy == FilterPolicy::RequireApplicable);
            if (killed) {
                result.eliminated_by[kind] += 1;
                return true;
            }
        }

        result.survivors.push_back(std::move(candidate));
        on_survivor(result.survivors.back());
        if (spec.limit && result.survivors.size() >= *spec.limit) {
            result.truncated = true;
            return false;
        }
        return true;
    });
    return result;
}

} // namespace arraudit
