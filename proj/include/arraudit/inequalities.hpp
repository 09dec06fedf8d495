#pragma once

#include "arraudit/core.hpp"
#include "arraudit/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arraudit {

/// The checks in canonical evaluation/report order.
enum class InequalityKind {
    LangerLines,
    LineConic,
    LineConicParam,
    EqualDegree,
    EqualDegreeParam,
    HirzebruchClassic,
    HirzebruchImproved,
    PrszLt,
};

/// All kinds in canonical order.
const std::vector<InequalityKind>& all_inequality_kinds();

std::string_view kind_name(InequalityKind kind);
std::optional<InequalityKind> kind_from_name(std::string_view name);
bool is_parametric(InequalityKind kind);

/// Identifier of one evaluated inequality; parametric variants carry the
/// rational weight they were evaluated at.
struct InequalityId {
    InequalityKind kind;
    std::optional<Rational> alpha;

    bool operator==(const InequalityId& other) const {
        return kind == other.kind && alpha == other.alpha;
    }
};

std::string to_string(const InequalityId& id);

/// Result of one check. Applicability is always reported, never silently
/// assumed; lhs/rhs/slack are populated only when the hypothesis of the
/// theorem holds for the class. Slack is lhs - rhs, so satisfied means
/// slack >= 0 uniformly.
struct InequalityReport {
    InequalityId id;
    bool applicable = false;
    std::string reason;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    std::optional<Rational> slack;
    bool equality = false;

    bool satisfied() const { return !applicable || *slack >= 0; }
    bool violated() const { return applicable && *slack < 0; }
};

/// Line arrangements with t_r = 0 for r > 2k/3:
///   t2 + (3/4) t3 >= k + Sigma_{r>=5} (r^2/4 - r) t_r
InequalityReport check_langer_lines(const ArrangementClass& a);

/// l lines and k >= 1 conics with t_r = 0 for r > 2(l+2k)/3:
///   t2 + (3/4) t3 + (4k + 2l - 4) k >= l + Sigma_{r>=5} (r^2/4 - r) t_r
InequalityReport check_line_conic(const ArrangementClass& a);

/// Parametric form of the line-conic inequality:
///   (6/alpha - 4) k + t2 + (3/4) t3 >= l + Sigma_{r>=5} (r^2/4 - r) t_r
/// Throws when alpha lies outside [3/(l+2k), 2/r_max]; at alpha = 3/(2k+l)
/// it coincides with check_line_conic.
InequalityReport check_line_conic_parametric(const ArrangementClass& a, const Rational& alpha);

/// k curves of one degree d with t_r = 0 for r > 2dk/3:
///   t2 + (3/4) t3 + d^2 k (dk - k - 1) >= Sigma_{r>=5} (r^2/4 - r) t_r
InequalityReport check_equal_degree(const ArrangementClass& a);

/// Parametric form of the equal-degree inequality:
///   t2 + (3/4) t3 + (3/alpha) dk (d-1) >= d^2 k + Sigma_{r>=5} (r^2/4 - r) t_r
/// Throws when alpha lies outside [3/(dk), 2/r_max]; at alpha = 3/(dk) its
/// slack equals that of check_equal_degree.
InequalityReport check_equal_degree_parametric(const ArrangementClass& a, const Rational& alpha);

/// k >= 6 lines with t_k = t_{k-1} = t_{k-2} = 0:
///   t2 + t3 >= k + Sigma_{r>=5} (r - 4) t_r
InequalityReport check_hirzebruch_classic(const ArrangementClass& a);

/// Same hypothesis:
///   t2 + (3/4) t3 >= k + Sigma_{r>=5} (2r - 9) t_r
InequalityReport check_hirzebruch_improved(const ArrangementClass& a);

/// k curves of one degree d >= 2 with no point on all k of them (the
/// hypothesis t_k = 0, which only constrains k >= 3):
///   ((7/2) d^2 - (9/2) d) k + t2 + t3 >= Sigma_{r>=5} (r - 4) t_r
InequalityReport check_prsz_lt(const ArrangementClass& a);

/// Dispatch one check by kind. Parametric kinds run at the given alpha, or
/// at the canonical alpha = 3/D_total when none is given (reported as not
/// applicable when the alpha interval is empty).
InequalityReport run_check(const ArrangementClass& a, InequalityKind kind,
                           const std::optional<Rational>& alpha = std::nullopt);

/// Every check in canonical order, parametric ones at the canonical alpha,
/// plus the pair-count identity status.
struct AuditResult {
    bool identity_valid = false;
    std::vector<InequalityReport> reports;

    bool any_violated() const;
};

AuditResult audit(const ArrangementClass& a);

} // namespace arraudit
