#include "arraudit/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace arraudit {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("weight vector must be nonempty");
    }
    for (const auto& w : weights_) {
        if (w < 0 || w > 1) {
            throw std::domain_error("branch weight outside [0, 1]: " + to_string(w));
        }
    }
    std::sort(weights_.begin(), weights_.end());
    total_ = 0;
    for (const auto& w : weights_) {
        total_ += w;
    }
}

WeightVector WeightVector::equal(std::size_t n, const Rational& alpha) {
    return WeightVector(std::vector<Rational>(n, alpha));
}

LocalEulerValue local_orbifold_euler(const WeightVector& w) {
    const Rational a = w.total();
    const Rational an = w.max_weight();
    if (a > 2) {
        return {Rational(0), true};
    }
    if (2 * an >= a) {
        return {(1 - a + an) * (1 - an), true};
    }
    const Rational half = 1 - a / 2;
    return {half * half, false};
}

LocalEulerValue local_orbifold_euler_equal(const Integer& r, const Rational& alpha) {
    if (r < 2) {
        throw std::invalid_argument("multiple point needs r >= 2 branches");
    }
    if (alpha < 0 || alpha > 1) {
        throw std::domain_error("branch weight outside [0, 1]: " + to_string(alpha));
    }
    const Rational a = Rational(r) * alpha;
    if (a > 2) {
        return {Rational(0), true};
    }
    if (r == 2 || alpha == 0) {
        // 2 a_n >= a holds exactly here; both closed forms coincide at r = 2.
        return {(1 - a + alpha) * (1 - alpha), true};
    }
    const Rational half = 1 - a / 2;
    return {half * half, false};
}

EmptyAlphaIntervalError::EmptyAlphaIntervalError(Rational lo_in, Rational hi_in)
    : std::domain_error("empty alpha interval: effectivity bound " + to_string(lo_in) +
                        " exceeds log-canonicity bound " + to_string(hi_in)),
      lo(std::move(lo_in)),
      hi(std::move(hi_in)) {}

Integer effective_r_max(const ArrangementClass& a) {
    const auto rm = a.t.r_max();
    return rm ? *rm : Integer(2);
}

AlphaInterval alpha_interval(const ArrangementClass& a) {
    const Rational lo = make_rational(3, a.components.total_degree());
    const Rational hi = make_rational(2, effective_r_max(a));
    if (lo > hi) {
        throw EmptyAlphaIntervalError(lo, hi);
    }
    return AlphaInterval{lo, hi};
}

std::optional<AlphaInterval> try_alpha_interval(const ArrangementClass& a) {
    const Rational lo = make_rational(3, a.components.total_degree());
    const Rational hi = make_rational(2, effective_r_max(a));
    if (lo > hi) {
        return std::nullopt;
    }
    return AlphaInterval{lo, hi};
}

namespace {

void require_in_interval(const ArrangementClass& a, const Rational& alpha) {
    const AlphaInterval interval = alpha_interval(a);
    if (!interval.contains(alpha)) {
        throw std::domain_error("alpha " + to_string(alpha) + " outside admissible interval [" +
                                to_string(interval.lo) + ", " + to_string(interval.hi) + "]");
    }
}

void require_identity(const ArrangementClass& a) {
    if (!validate_identity(a)) {
        throw std::domain_error("not a consistent transversal arrangement: " +
                                to_string(a.t.point_pair_sum()) + " != " + to_string(pair_count(a)));
    }
}

} // namespace

Rational lmy_lhs_bound(const ArrangementClass& a, const Rational& alpha) {
    require_in_interval(a, alpha);
    const Rational f1(f_number(a, 1));
    const Rational f2(f_number(a, 2));
    return 3 * alpha * f2 - 3 * alpha * f1 - Rational(3, 4) * alpha * alpha * f2;
}

Rational lmy_rhs(const ArrangementClass& a, const Rational& alpha) {
    const Rational degree(a.components.total_degree());
    return (3 * alpha - alpha * alpha) * degree * degree - 3 * alpha * degree;
}

Rational global_orbifold_euler_bound(const ArrangementClass& a, const Rational& alpha) {
    require_identity(a);
    if (alpha < 0 || alpha > 1) {
        throw std::domain_error("weight alpha outside [0, 1]: " + to_string(alpha));
    }
    if (alpha * Rational(effective_r_max(a)) > 2) {
        throw std::domain_error("pair not log canonical: alpha * r_max = " +
                                to_string(alpha * Rational(effective_r_max(a))) + " > 2");
    }
    // Each smooth degree-d component contributes e_top = 3d - d^2; removing
    // the singular points removes each point from m_p of the components,
    // so Sigma_i e_top(D_i minus Sing) = Sigma_i (3 d_i - d_i^2) - f1.
    Integer smooth_euler_sum = 0;
    for (const auto& g : a.components.groups()) {
        smooth_euler_sum += g.count * (3 * g.degree - g.degree * g.degree);
    }
    const Rational component_term = alpha * Rational(smooth_euler_sum - f_number(a, 1));
    Rational point_term = 0;
    for (const auto& [r, c] : a.t.counts()) {
        const LocalEulerValue local = local_orbifold_euler_equal(r, alpha);
        point_term += Rational(c) * (local.value - 1);
    }
    return 3 - component_term + point_term;
}

LmyGlobalReport lmy_global_check(const ArrangementClass& a, const Rational& alpha) {
    require_identity(a);
    require_in_interval(a, alpha);
    const Rational degree(a.components.total_degree());
    const Rational canonical_sum = alpha * degree - 3;
    LmyGlobalReport report;
    report.lhs = canonical_sum * canonical_sum;
    report.rhs = 3 * global_orbifold_euler_bound(a, alpha);
    report.satisfied = report.lhs <= report.rhs;
    return report;
}

} // namespace arraudit
