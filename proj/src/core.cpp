#include "arraudit/core.hpp"

#include <sstream>
#include <stdexcept>

namespace arraudit {

TVector::TVector(const std::map<Integer, Integer>& counts) {
    for (const auto& [r, c] : counts) {
        set(r, c);
    }
}

TVector::TVector(std::initializer_list<std::pair<const Integer, Integer>> counts) {
    for (const auto& [r, c] : counts) {
        set(r, c);
    }
}

void TVector::set(const Integer& r, const Integer& count) {
    if (r < 2) {
        throw std::invalid_argument("t-vector multiplicity must be >= 2, got " + to_string(r));
    }
    if (count < 0) {
        throw std::invalid_argument("t_" + to_string(r) + " must be >= 0, got " + to_string(count));
    }
    if (count == 0) {
        counts_.erase(r);
    } else {
        counts_[r] = count;
    }
}

void TVector::add(const Integer& r, const Integer& delta) {
    set(r, at(r) + delta);
}

Integer TVector::at(const Integer& r) const {
    const auto it = counts_.find(r);
    return it == counts_.end() ? Integer(0) : it->second;
}

std::optional<Integer> TVector::r_max() const {
    if (counts_.empty()) {
        return std::nullopt;
    }
    return counts_.rbegin()->first;
}

Integer TVector::point_pair_sum() const {
    Integer sum = 0;
    for (const auto& [r, c] : counts_) {
        sum += c * choose2(r);
    }
    return sum;
}

ComponentSpec::ComponentSpec(std::vector<DegreeGroup> groups) : groups_(std::move(groups)) {
    if (groups_.empty()) {
        throw std::invalid_argument("arrangement needs at least one component group");
    }
    for (const auto& g : groups_) {
        if (g.degree < 1) {
            throw std::invalid_argument("component degree must be >= 1, got " + to_string(g.degree));
        }
        if (g.count < 1) {
            throw std::invalid_argument("component count must be >= 1, got " + to_string(g.count));
        }
    }
}

Integer ComponentSpec::total_count() const {
    Integer n = 0;
    for (const auto& g : groups_) {
        n += g.count;
    }
    return n;
}

Integer ComponentSpec::total_degree() const {
    Integer d = 0;
    for (const auto& g : groups_) {
        d += g.degree * g.count;
    }
    return d;
}

std::optional<Integer> ComponentSpec::uniform_degree() const {
    const Integer d = groups_.front().degree;
    for (const auto& g : groups_) {
        if (g.degree != d) {
            return std::nullopt;
        }
    }
    return d;
}

bool ComponentSpec::is_lines() const {
    const auto d = uniform_degree();
    return d && *d == 1;
}

bool ComponentSpec::is_line_conic() const {
    for (const auto& g : groups_) {
        if (g.degree != 1 && g.degree != 2) {
            return false;
        }
    }
    return true;
}

Integer ComponentSpec::count_of_degree(const Integer& d) const {
    Integer n = 0;
    for (const auto& g : groups_) {
        if (g.degree == d) {
            n += g.count;
        }
    }
    return n;
}

ComponentSpec ComponentSpec::lines(const Integer& k) {
    return ComponentSpec({DegreeGroup{1, k}});
}

ComponentSpec ComponentSpec::equal_degree(const Integer& d, const Integer& k) {
    return ComponentSpec({DegreeGroup{d, k}});
}

ComponentSpec ComponentSpec::line_conic(const Integer& l, const Integer& k) {
    std::vector<DegreeGroup> groups;
    if (l > 0) {
        groups.push_back(DegreeGroup{1, l});
    }
    if (k > 0) {
        groups.push_back(DegreeGroup{2, k});
    }
    return ComponentSpec(std::move(groups));
}

Integer f_number(const ArrangementClass& a, int i) {
    if (i < 0 || i > 2) {
        throw std::invalid_argument("f-number index must be 0, 1 or 2");
    }
    Integer sum = 0;
    for (const auto& [r, c] : a.t.counts()) {
        Integer term = c;
        for (int j = 0; j < i; ++j) {
            term *= r;
        }
        sum += term;
    }
    return sum;
}

Integer pair_count(const ComponentSpec& components) {
    // Sigma_{i<j} d_i d_j = (D^2 - Sigma_i d_i^2) / 2 over individual components.
    const Integer total = components.total_degree();
    Integer square_sum = 0;
    for (const auto& g : components.groups()) {
        square_sum += g.count * g.degree * g.degree;
    }
    return (total * total - square_sum) / 2;
}

Integer pair_count(const ArrangementClass& a) {
    return pair_count(a.components);
}

bool validate_identity(const ArrangementClass& a) {
    return a.t.point_pair_sum() == pair_count(a);
}

Integer milnor_ordinary(const Integer& m) {
    if (m < 2) {
        throw std::domain_error("ordinary singular point needs multiplicity >= 2, got " + to_string(m));
    }
    return (m - 1) * (m - 1);
}

Integer euler_reduced_curve(const ArrangementClass& a) {
    if (!validate_identity(a)) {
        throw std::domain_error("not a consistent transversal arrangement: " +
                                to_string(a.t.point_pair_sum()) + " != " + to_string(pair_count(a)));
    }
    const Integer degree = a.components.total_degree();
    Integer milnor_sum = 0;
    for (const auto& [r, c] : a.t.counts()) {
        milnor_sum += c * (r - 1) * (r - 1);
    }
    return -degree * (degree - 3) + milnor_sum;
}

namespace {

ArrangementClass lines_class(const Integer& k, const std::map<Integer, Integer>& t) {
    return ArrangementClass{ComponentSpec::lines(k), TVector(t)};
}

Integer require_param(std::string_view name, const std::optional<Integer>& param) {
    if (!param) {
        throw std::invalid_argument(std::string(name) + " requires an integer parameter");
    }
    return *param;
}

void reject_param(std::string_view name, const std::optional<Integer>& param) {
    if (param) {
        throw std::invalid_argument(std::string(name) + " takes no parameter");
    }
}

} // namespace

ArrangementClass catalog(std::string_view name, std::optional<Integer> param) {
    if (name == "icosahedron") {
        reject_param(name, param);
        return lines_class(15, {{2, 15}, {3, 10}, {5, 6}});
    }
    if (name == "klein") {
        reject_param(name, param);
        return lines_class(21, {{3, 28}, {4, 21}});
    }
    if (name == "fermat") {
        const Integer n = require_param(name, param);
        if (n < 3) {
            throw std::invalid_argument("fermat arrangement requires n >= 3, got " + to_string(n));
        }
        TVector t;
        t.set(3, n * n);
        // At n = 3 the n-fold points are themselves triple points; the two
        // keys collide and merge into t3 = n^2 + 3.
        t.add(n, 3);
        return ArrangementClass{ComponentSpec::lines(3 * n), t};
    }
    if (name == "hesse") {
        reject_param(name, param);
        return lines_class(12, {{2, 12}, {4, 9}});
    }
    if (name == "extended_hesse") {
        reject_param(name, param);
        return lines_class(21, {{2, 36}, {4, 9}, {5, 12}});
    }
    if (name == "wiman") {
        reject_param(name, param);
        return lines_class(45, {{3, 120}, {4, 45}, {5, 36}});
    }
    if (name == "generic_lines") {
        const Integer k = require_param(name, param);
        if (k < 1) {
            throw std::invalid_argument("generic_lines requires k >= 1, got " + to_string(k));
        }
        TVector t;
        if (k >= 2) {
            t.set(2, choose2(k));
        }
        return ArrangementClass{ComponentSpec::lines(k), t};
    }
    if (name == "pencil") {
        const Integer k = require_param(name, param);
        if (k < 2) {
            throw std::invalid_argument("pencil requires k >= 2, got " + to_string(k));
        }
        TVector t;
        t.set(k, 1);
        return ArrangementClass{ComponentSpec::lines(k), t};
    }
    throw std::invalid_argument("unknown catalog arrangement: '" + std::string(name) + "'");
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "icosahedron", "klein",         "fermat", "hesse",
        "extended_hesse", "wiman",      "generic_lines", "pencil",
    };
    return names;
}

} // namespace arraudit
