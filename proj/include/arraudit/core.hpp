#pragma once

#include "arraudit/rational.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace arraudit {

/// Sparse multiplicity profile of an arrangement: t(r) is the number of
/// points where exactly r components meet. Keys are >= 2 and stored counts
/// are > 0; an absent key means t_r = 0.
class TVector {
public:
    TVector() = default;
    explicit TVector(const std::map<Integer, Integer>& counts);
    TVector(std::initializer_list<std::pair<const Integer, Integer>> counts);

    /// Set t_r = count. count == 0 erases the key. Throws on r < 2 or
    /// count < 0.
    void set(const Integer& r, const Integer& count);

    /// Add delta points of multiplicity r (delta may be negative as long as
    /// the result stays >= 0).
    void add(const Integer& r, const Integer& delta);

    /// t_r, 0 when absent.
    Integer at(const Integer& r) const;

    bool empty() const { return counts_.empty(); }

    /// Largest multiplicity present, or nullopt when empty.
    std::optional<Integer> r_max() const;

    const std::map<Integer, Integer>& counts() const { return counts_; }

    /// Total weighted pair count Sigma_r t_r * C(r,2).
    Integer point_pair_sum() const;

    bool operator==(const TVector& other) const { return counts_ == other.counts_; }
    bool operator!=(const TVector& other) const { return !(*this == other); }
    bool operator<(const TVector& other) const { return counts_ < other.counts_; }

private:
    std::map<Integer, Integer> counts_;
};

/// One batch of identical-degree components.
struct DegreeGroup {
    Integer degree;
    Integer count;

    bool operator==(const DegreeGroup& other) const {
        return degree == other.degree && count == other.count;
    }
};

/// Composition of an arrangement: how many components of each degree.
class ComponentSpec {
public:
    explicit ComponentSpec(std::vector<DegreeGroup> groups);

    const std::vector<DegreeGroup>& groups() const { return groups_; }

    Integer total_count() const;
    Integer total_degree() const;

    /// The common degree d when every component has it, nullopt otherwise.
    std::optional<Integer> uniform_degree() const;

    bool is_lines() const;

    /// All degrees lie in {1, 2}.
    bool is_line_conic() const;

    /// Number of components of exactly this degree.
    Integer count_of_degree(const Integer& d) const;

    static ComponentSpec lines(const Integer& k);
    static ComponentSpec equal_degree(const Integer& d, const Integer& k);
    /// l lines plus k conics; either may be zero but not both.
    static ComponentSpec line_conic(const Integer& l, const Integer& k);

    bool operator==(const ComponentSpec& other) const { return groups_ == other.groups_; }

private:
    std::vector<DegreeGroup> groups_;
};

/// The combinatorial class of a curve arrangement: its composition plus its
/// t-vector. Purely numeric; realizability over the complex numbers is never
/// checked here (the inequality suite exists to rule classes out).
struct ArrangementClass {
    ComponentSpec components;
    TVector t;

    bool operator==(const ArrangementClass& other) const {
        return components == other.components && t == other.t;
    }
};

/// f_i = Sigma_r r^i t_r for i in {0,1,2}. f_1 is the total multiplicity
/// Sigma_p m_p and f_2 is Sigma_p m_p^2.
Integer f_number(const ArrangementClass& a, int i);

/// Sigma over unordered component pairs of the product of their degrees
/// (the Bezout count for transversal smooth components).
Integer pair_count(const ComponentSpec& components);
Integer pair_count(const ArrangementClass& a);

/// True iff Sigma_r t_r C(r,2) == pair_count: every intersection of two
/// components is accounted for by exactly one multiple point.
bool validate_identity(const ArrangementClass& a);

/// Milnor number of an ordinary singular point of multiplicity m: (m-1)^2.
/// Throws std::domain_error for m < 2.
Integer milnor_ordinary(const Integer& m);

/// Topological Euler number of the reduced curve: -D(D-3) + Sigma_p mu_p
/// with D the total degree. Requires validate_identity(a).
Integer euler_reduced_curve(const ArrangementClass& a);

/// Named arrangements with published combinatorics:
///   icosahedron            15 lines, t2=15 t3=10 t5=6
///   klein                  21 lines, t3=28 t4=21
///   fermat(n >= 3)         3n lines, t3=n^2, tn=3 (merged into t3=n^2+3 at n=3)
///   hesse                  12 lines, t2=12 t4=9
///   extended_hesse         21 lines, t2=36 t4=9 t5=12
///   wiman                  45 lines, t3=120 t4=45 t5=36
///   generic_lines(k >= 1)  k lines, t2=C(k,2)
///   pencil(k >= 2)         k concurrent lines, tk=1
/// Throws std::invalid_argument for unknown names or bad parameters.
ArrangementClass catalog(std::string_view name, std::optional<Integer> param = std::nullopt);

/// Names accepted by catalog(), in presentation order.
const std::vector<std::string>& catalog_names();

} // namespace arraudit
