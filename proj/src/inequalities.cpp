#include "arraudit/inequalities.hpp"

#include "arraudit/orbifold.hpp"

#include <stdexcept>

namespace arraudit {

const std::vector<InequalityKind>& all_inequality_kinds() {
    static const std::vector<InequalityKind> kinds = {
        InequalityKind::LangerLines,       InequalityKind::LineConic,
        InequalityKind::LineConicParam,    InequalityKind::EqualDegree,
        InequalityKind::EqualDegreeParam,  InequalityKind::HirzebruchClassic,
        InequalityKind::HirzebruchImproved, InequalityKind::PrszLt,
    };
    return kinds;
}

std::string_view kind_name(InequalityKind kind) {
    switch (kind) {
        case InequalityKind::LangerLines: return "langer_lines";
        case InequalityKind::LineConic: return "line_conic";
        case InequalityKind::LineConicParam: return "line_conic_param";
        case InequalityKind::EqualDegree: return "equal_degree";
        case InequalityKind::EqualDegreeParam: return "equal_degree_param";
        case InequalityKind::HirzebruchClassic: return "hirzebruch_classic";
        case InequalityKind::HirzebruchImproved: return "hirzebruch_improved";
        case InequalityKind::PrszLt: return "prsz_lt";
    }
    throw std::logic_error("unreachable inequality kind");
}

std::optional<InequalityKind> kind_from_name(std::string_view name) {
    for (const auto kind : all_inequality_kinds()) {
        if (kind_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

bool is_parametric(InequalityKind kind) {
    return kind == InequalityKind::LineConicParam || kind == InequalityKind::EqualDegreeParam;
}

std::string to_string(const InequalityId& id) {
    std::string s(kind_name(id.kind));
    if (id.alpha) {
        s += '(';
        s += to_string(*id.alpha);
        s += ')';
    }
    return s;
}

namespace {

InequalityReport not_applicable(InequalityId id, std::string reason) {
    InequalityReport report;
    report.id = std::move(id);
    report.applicable = false;
    report.reason = std::move(reason);
    return report;
}

InequalityReport applicable(InequalityId id, Rational lhs, Rational rhs) {
    InequalityReport report;
    report.id = std::move(id);
    report.applicable = true;
    report.lhs = lhs;
    report.rhs = rhs;
    report.slack = lhs - rhs;
    report.equality = (*report.slack == 0);
    return report;
}

/// Sigma_{r>=5} coeff(r) * t_r for the three tail weightings in use.
Rational tail_sum_quarter_square(const TVector& t) {
    Rational sum = 0;
    for (const auto& [r, c] : t.counts()) {
        if (r >= 5) {
            sum += Rational(c) * (Rational(r * r, 4) - Rational(r));
        }
    }
    return sum;
}

Integer tail_sum_linear(const TVector& t, const Integer& scale, const Integer& shift) {
    // Sigma_{r>=5} (scale*r - shift) * t_r
    Integer sum = 0;
    for (const auto& [r, c] : t.counts()) {
        if (r >= 5) {
            sum += c * (scale * r - shift);
        }
    }
    return sum;
}

/// Shared hypothesis of the weighted inequalities: t_r = 0 for 3r > 2D,
/// with r_max floored at 2 so that the admissible weight interval
/// [3/D, 2/r_max] is genuinely nonempty. Without the floor a lone line or
/// conic (D < 3) would pass the gate vacuously and then "violate" an
/// inequality whose derivation needs a weight alpha <= 1 with alpha*D >= 3.
bool multiplicity_gate(const ArrangementClass& a) {
    return 3 * effective_r_max(a) <= 2 * a.components.total_degree();
}

std::string multiplicity_gate_reason(const ArrangementClass& a) {
    return "hypothesis t_r = 0 for r > 2*" + to_string(a.components.total_degree()) +
           "/3 fails (effective r_max = " + to_string(effective_r_max(a)) + ")";
}

Rational low_mult_weighted(const ArrangementClass& a) {
    // t2 + (3/4) t3
    return Rational(a.t.at(2)) + Rational(3, 4) * Rational(a.t.at(3));
}

} // namespace

InequalityReport check_langer_lines(const ArrangementClass& a) {
    const InequalityId id{InequalityKind::LangerLines, std::nullopt};
    if (!a.components.is_lines()) {
        return not_applicable(id, "not a line arrangement");
    }
    if (!multiplicity_gate(a)) {
        return not_applicable(id, multiplicity_gate_reason(a));
    }
    const Integer k = a.components.total_count();
    const Rational lhs = low_mult_weighted(a);
    const Rational rhs = Rational(k) + tail_sum_quarter_square(a.t);
    return applicable(id, lhs, rhs);
}

InequalityReport check_line_conic(const ArrangementClass& a) {
    const InequalityId id{InequalityKind::LineConic, std::nullopt};
    if (!a.components.is_line_conic()) {
        return not_applicable(id, "components must all have degree 1 or 2");
    }
    const Integer k = a.components.count_of_degree(2);
    if (k < 1) {
        return not_applicable(id, "requires at least one conic component");
    }
    if (!multiplicity_gate(a)) {
        return not_applicable(id, multiplicity_gate_reason(a));
    }
    const Integer l = a.components.count_of_degree(1);
    const Rational lhs = low_mult_weighted(a) + Rational((4 * k + 2 * l - 4) * k);
    const Rational rhs = Rational(l) + tail_sum_quarter_square(a.t);
    return applicable(id, lhs, rhs);
}

InequalityReport check_line_conic_parametric(const ArrangementClass& a, const Rational& alpha) {
    const AlphaInterval interval = alpha_interval(a);
    if (!interval.contains(alpha)) {
        throw std::domain_error("alpha " + to_string(alpha) + " outside admissible interval [" +
                                to_string(interval.lo) + ", " + to_string(interval.hi) + "]");
    }
    const InequalityId id{InequalityKind::LineConicParam, alpha};
    if (!a.components.is_line_conic()) {
        return not_applicable(id, "components must all have degree 1 or 2");
    }
    const Integer k = a.components.count_of_degree(2);
    if (k < 1) {
        return not_applicable(id, "requires at least one conic component");
    }
    // alpha <= 2/r_max already enforces the multiplicity hypothesis.
    const Integer l = a.components.count_of_degree(1);
    const Rational lhs = (6 / alpha - 4) * Rational(k) + low_mult_weighted(a);
    const Rational rhs = Rational(l) + tail_sum_quarter_square(a.t);
    return applicable(id, lhs, rhs);
}

InequalityReport check_equal_degree(const ArrangementClass& a) {
    const InequalityId id{InequalityKind::EqualDegree, std::nullopt};
    const auto d = a.components.uniform_degree();
    if (!d) {
        return not_applicable(id, "components do not share a single degree");
    }
    if (!multiplicity_gate(a)) {
        return not_applicable(id, multiplicity_gate_reason(a));
    }
    const Integer k = a.components.total_count();
    const Rational lhs = low_mult_weighted(a) + Rational(*d * *d * k * (*d * k - k - 1));
    const Rational rhs = tail_sum_quarter_square(a.t);
    return applicable(id, lhs, rhs);
}

InequalityReport check_equal_degree_parametric(const ArrangementClass& a, const Rational& alpha) {
    const AlphaInterval interval = alpha_interval(a);
    if (!interval.contains(alpha)) {
        throw std::domain_error("alpha " + to_string(alpha) + " outside admissible interval [" +
                                to_string(interval.lo) + ", " + to_string(interval.hi) + "]");
    }
    const InequalityId id{InequalityKind::EqualDegreeParam, alpha};
    const auto d = a.components.uniform_degree();
    if (!d) {
        return not_applicable(id, "components do not share a single degree");
    }
    const Integer k = a.components.total_count();
    const Rational lhs =
        low_mult_weighted(a) + (3 / alpha) * Rational(*d * k * (*d - 1));
    const Rational rhs = Rational(*d * *d * k) + tail_sum_quarter_square(a.t);
    return applicable(id, lhs, rhs);
}

namespace {

/// Shared hypothesis of both Hirzebruch inequalities: k >= 6 lines and no
/// points of multiplicity k, k-1 or k-2.
std::optional<std::string> hirzebruch_gate(const ArrangementClass& a) {
    if (!a.components.is_lines()) {
        return "not a line arrangement";
    }
    const Integer k = a.components.total_count();
    if (k < 6) {
        return "requires at least 6 lines, got " + to_string(k);
    }
    for (Integer r = k - 2; r <= k; ++r) {
        if (r >= 2 && a.t.at(r) != 0) {
            return "hypothesis t_k = t_{k-1} = t_{k-2} = 0 fails (t_" + to_string(r) + " = " +
                   to_string(a.t.at(r)) + ")";
        }
    }
    return std::nullopt;
}

} // namespace

InequalityReport check_hirzebruch_classic(const ArrangementClass& a) {
    const InequalityId id{InequalityKind::HirzebruchClassic, std::nullopt};
    if (const auto reason = hirzebruch_gate(a)) {
        return not_applicable(id, *reason);
    }
    const Integer k = a.components.total_count();
    const Rational lhs = Rational(a.t.at(2) + a.t.at(3));
    const Rational rhs = Rational(k + tail_sum_linear(a.t, 1, 4));
    return applicable(id, lhs, rhs);
}

InequalityReport check_hirzebruch_improved(const ArrangementClass& a) {
    const InequalityId id{InequalityKind::HirzebruchImproved, std::nullopt};
    if (const auto reason = hirzebruch_gate(a)) {
        return not_applicable(id, *reason);
    }
    const Integer k = a.components.total_count();
    const Rational lhs = low_mult_weighted(a);
    const Rational rhs = Rational(k + tail_sum_linear(a.t, 2, 9));
    return applicable(id, lhs, rhs);
}

InequalityReport check_prsz_lt(const ArrangementClass& a) {
    const InequalityId id{InequalityKind::PrszLt, std::nullopt};
    const auto d = a.components.uniform_degree();
    if (!d) {
        return not_applicable(id, "components do not share a single degree");
    }
    if (*d < 2) {
        return not_applicable(id, "requires component degree >= 2");
    }
    const Integer k = a.components.total_count();
    // Two curves of degree >= 2 always meet, so the no-common-point
    // hypothesis t_k = 0 only constrains arrangements with k >= 3 members.
    if (k >= 3 && a.t.at(k) != 0) {
        return not_applicable(id, "hypothesis t_k = 0 fails (t_" + to_string(k) + " = " +
                                      to_string(a.t.at(k)) + ")");
    }
    const Rational lhs = (Rational(7, 2) * Rational(*d * *d) - Rational(9, 2) * Rational(*d)) * Rational(k) +
                         Rational(a.t.at(2) + a.t.at(3));
    const Rational rhs = Rational(tail_sum_linear(a.t, 1, 4));
    return applicable(id, lhs, rhs);
}

InequalityReport run_check(const ArrangementClass& a, InequalityKind kind,
                           const std::optional<Rational>& alpha) {
    if (is_parametric(kind)) {
        Rational at;
        if (alpha) {
            at = *alpha;
        } else {
            const auto interval = try_alpha_interval(a);
            if (!interval) {
                return not_applicable(InequalityId{kind, std::nullopt},
                                      "empty alpha interval (r_max > 2*D/3)");
            }
            at = interval->lo; // canonical alpha = 3/D_total
        }
        return kind == InequalityKind::LineConicParam ? check_line_conic_parametric(a, at)
                                                      : check_equal_degree_parametric(a, at);
    }
    switch (kind) {
        case InequalityKind::LangerLines: return check_langer_lines(a);
        case InequalityKind::LineConic: return check_line_conic(a);
        case InequalityKind::EqualDegree: return check_equal_degree(a);
        case InequalityKind::HirzebruchClassic: return check_hirzebruch_classic(a);
        case InequalityKind::HirzebruchImproved: return check_hirzebruch_improved(a);
        case InequalityKind::PrszLt: return check_prsz_lt(a);
        default: throw std::logic_error("unreachable inequality kind");
    }
}

bool AuditResult::any_violated() const {
    for (const auto& report : reports) {
        if (report.violated()) {
            return true;
        }
    }
    return false;
}

AuditResult audit(const ArrangementClass& a) {
    AuditResult result;
    result.identity_valid = validate_identity(a);
    for (const auto kind : all_inequality_kinds()) {
        result.reports.push_back(run_check(a, kind));
    }
    return result;
}

} // namespace arraudit
