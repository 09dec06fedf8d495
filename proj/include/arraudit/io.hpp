#pragma once

#include "arraudit/core.hpp"
#include "arraudit/geometry.hpp"
#include "arraudit/inequalities.hpp"
#include "arraudit/orbifold.hpp"
#include "arraudit/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arraudit {

/// Input failure with the 1-based position of the offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    const std::size_t line;
    const std::size_t column;
};

/// JSON value for an exact integer: a plain number when it fits in 64 bits,
/// a decimal string beyond that.
nlohmann::ordered_json integer_to_json(const Integer& n);

/// Inverse of integer_to_json; also accepts what users write by hand.
/// Rejects floating-point numbers and malformed strings.
Integer json_to_integer(const nlohmann::json& value);

/// { "components": [ {"degree": 1, "count": 21} ], "t": { "3": 28, ... } }
/// with multiplicity keys as decimal strings in ascending numeric order.
nlohmann::ordered_json class_to_json(const ArrangementClass& a);

/// Canonical class file: two-space-indented JSON plus trailing newline.
/// Byte-stable for equal classes.
std::string serialize_class(const ArrangementClass& a);

/// Parse the class file format. Zero counts are dropped; unknown keys are
/// ignored; a missing "t" means no multiple points. Structural JSON errors
/// raise ParseError with position; semantic ones raise
/// std::invalid_argument.
ArrangementClass parse_arrangement(const std::string& text);

/// Parse { "lines": [ [a, b, c], ... ] } with integer or "p/q" entries;
/// rational triples are cleared to primitive integer form.
std::vector<ProjectiveLine> parse_lines_file(const std::string& text);

/// { "id": ..., "alpha"?: ..., "applicable": ..., "reason"?: ...,
///   "lhs"/"rhs"/"slack"?: "p/q", "equality": ... }
nlohmann::ordered_json report_to_json(const InequalityReport& report);

/// Everything one audit run knows, ready for rendering in any format.
struct AuditDocument {
    ArrangementClass arrangement;
    AuditResult result;
    std::optional<AlphaInterval> interval;
    /// Extra section evaluated at a user-chosen weight.
    std::optional<Rational> alpha;
    std::vector<InequalityReport> alpha_reports;
    std::optional<LmyGlobalReport> lmy;

    /// 0 when nothing applicable is violated, 2 when the class is ruled out
    /// (identity broken, a violated inequality, or a failed global check).
    int exit_code() const;
};

/// Run the audit; when alpha is given and the identity holds, also evaluate
/// the parametric checks and the global inequality there. Throws
/// std::domain_error when alpha lies outside the admissible interval.
AuditDocument build_audit_document(const ArrangementClass& a,
                                   const std::optional<Rational>& alpha = std::nullopt);

nlohmann::ordered_json audit_to_json(const AuditDocument& doc);
std::string audit_to_table(const AuditDocument& doc);
std::string audit_to_csv(const AuditDocument& doc);

} // namespace arraudit
