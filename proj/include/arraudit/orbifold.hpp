#pragma once

#include "arraudit/core.hpp"
#include "arraudit/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace arraudit {

/// Local branch weights 0 <= a_1 <= ... <= a_n <= 1 at an ordinary point.
/// The constructor sorts; out-of-range weights or an empty list throw.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> weights);

    /// n equal weights alpha (an r-fold point of the weighted divisor
    /// alpha*C). Requires n >= 1 to fit in std::size_t-sized storage only
    /// for the general evaluator; global formulas use the closed form.
    static WeightVector equal(std::size_t n, const Rational& alpha);

    const std::vector<Rational>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

    /// a = Sigma a_i.
    Rational total() const { return total_; }

    /// a_n.
    Rational max_weight() const { return weights_.back(); }

private:
    std::vector<Rational> weights_;
    Rational total_;
};

/// A local orbifold Euler number, either the exact value or only an upper
/// bound for it (the region 2 a_n < a <= 2 admits only the bound
/// (1 - a/2)^2).
struct LocalEulerValue {
    Rational value;
    bool exact = true;
};

/// e_orb(0; C^2, D) for n weighted smooth transversal branches:
///   a > 2                      -> 0, exact
///   2 a_n >= a                 -> (1 - a + a_n)(1 - a_n), exact
///   2 a_n < a <= 2             -> (1 - a/2)^2, upper bound only
/// At 2 a_n = a the two closed forms coincide and the result is exact.
LocalEulerValue local_orbifold_euler(const WeightVector& w);

/// Same quantity for r equal weights alpha without materializing the
/// weights; exact for r = 2, bound for r >= 3 (with alpha > 0).
/// Requires r >= 2 and alpha in [0, 1].
LocalEulerValue local_orbifold_euler_equal(const Integer& r, const Rational& alpha);

/// Weight range [3/D, 2/r_max] on which K + alpha*C is both effective
/// (degree >= 0) and log canonical at all ordinary points (alpha * r <= 2).
struct AlphaInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& alpha) const { return lo <= alpha && alpha <= hi; }
};

/// Raised when 3/D > 2/r_max; carries both endpoints.
class EmptyAlphaIntervalError : public std::domain_error {
public:
    EmptyAlphaIntervalError(Rational lo, Rational hi);

    const Rational lo;
    const Rational hi;
};

/// r_max of the t-vector, defaulting to 2 when the arrangement has no
/// multiple points (no multiplicity constraint then applies beyond nodes).
Integer effective_r_max(const ArrangementClass& a);

/// [3/D_total, 2/r_max]. Throws EmptyAlphaIntervalError when empty, which
/// happens exactly when r_max > 2*D_total/3.
AlphaInterval alpha_interval(const ArrangementClass& a);

/// Non-throwing variant: nullopt when the interval is empty.
std::optional<AlphaInterval> try_alpha_interval(const ArrangementClass& a);

/// Proof-side lower bound for the singularity sum of the plane inequality:
/// 3*alpha*f2 - 3*alpha*f1 - (3/4)*alpha^2*f2, obtained by substituting the
/// local upper bounds. Requires alpha in alpha_interval(a).
Rational lmy_lhs_bound(const ArrangementClass& a, const Rational& alpha);

/// Right-hand side of the plane inequality: (3*alpha - alpha^2)*D^2 - 3*alpha*D.
Rational lmy_rhs(const ArrangementClass& a, const Rational& alpha);

/// Upper bound for the global orbifold Euler number of (P^2, alpha*C):
///   3 - alpha*(Sigma_i (3 d_i - d_i^2) - f1) + Sigma_r t_r (E_r - 1)
/// where E_r is the local value at an r-fold point of r equal weights alpha
/// (exact for r = 2, bound for r >= 3). Requires validate_identity(a),
/// alpha in [0, 1], and alpha * r_max <= 2 so every local contribution lies
/// in its stated region.
Rational global_orbifold_euler_bound(const ArrangementClass& a, const Rational& alpha);

/// The global inequality (K + alpha*C)^2 <= 3 e_orb on the projective
/// plane, with the left side computed as (alpha*D - 3)^2. An unsatisfied
/// report certifies that the class has no realization with ordinary
/// singularities (within the slack of the local bounds).
struct LmyGlobalReport {
    Rational lhs;
    Rational rhs;
    bool satisfied = false;
};

/// Requires validate_identity(a) and alpha in alpha_interval(a); both the
/// effectivity and the log-canonicity hypotheses are needed for the
/// inequality to certify anything.
LmyGlobalReport lmy_global_check(const ArrangementClass& a, const Rational& alpha);

} // namespace arraudit
