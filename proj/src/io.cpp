#include "arraudit/io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

namespace arraudit {

ParseError::ParseError(const std::string& message, std::size_t line_in, std::size_t column_in)
    : std::runtime_error(message + " at line " + std::to_string(line_in) + ", column " +
                         std::to_string(column_in)),
      line(line_in),
      column(column_in) {}

namespace {

/// 1-based line/column of a 1-based byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

nlohmann::ordered_json parse_json(const std::string& text) {
    try {
        return nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte);
        throw ParseError(e.what(), line, column);
    }
}

std::string rational_string(const Rational& q) {
    return to_string(q);
}

} // namespace

nlohmann::ordered_json integer_to_json(const Integer& n) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) {
        return static_cast<std::int64_t>(n);
    }
    return to_string(n);
}

Integer json_to_integer(const nlohmann::json& value) {
    if (value.is_number_integer()) {
        return Integer(value.get<std::int64_t>());
    }
    if (value.is_number_unsigned()) {
        return Integer(value.get<std::uint64_t>());
    }
    if (value.is_string()) {
        return parse_integer(value.get<std::string>());
    }
    if (value.is_number_float()) {
        throw std::invalid_argument("expected an exact integer, got a float: " + value.dump());
    }
    throw std::invalid_argument("expected an integer, got: " + value.dump());
}

nlohmann::ordered_json class_to_json(const ArrangementClass& a) {
    nlohmann::ordered_json doc;
    auto& components = doc["components"];
    components = nlohmann::ordered_json::array();
    for (const auto& g : a.components.groups()) {
        nlohmann::ordered_json group;
        group["degree"] = integer_to_json(g.degree);
        group["count"] = integer_to_json(g.count);
        components.push_back(std::move(group));
    }
    auto& t = doc["t"];
    t = nlohmann::ordered_json::object();
    for (const auto& [r, c] : a.t.counts()) {
        t[to_string(r)] = integer_to_json(c);
    }
    return doc;
}

std::string serialize_class(const ArrangementClass& a) {
    return class_to_json(a).dump(2) + "\n";
}

ArrangementClass parse_arrangement(const std::string& text) {
    const nlohmann::ordered_json doc = parse_json(text);
    if (!doc.is_object()) {
        throw std::invalid_argument("arrangement file must be a JSON object");
    }
    if (!doc.contains("components")) {
        throw std::invalid_argument("arrangement file needs a \"components\" array");
    }
    const auto& components = doc["components"];
    if (!components.is_array() || components.empty()) {
        throw std::invalid_argument("\"components\" must be a nonempty array");
    }
    std::vector<DegreeGroup> groups;
    for (const auto& entry : components) {
        if (!entry.is_object() || !entry.contains("degree") || !entry.contains("count")) {
            throw std::invalid_argument(
                "each component needs \"degree\" and \"count\": " + entry.dump());
        }
        groups.push_back(DegreeGroup{json_to_integer(entry["degree"]),
                                     json_to_integer(entry["count"])});
    }

    TVector t;
    if (doc.contains("t")) {
        const auto& tv = doc["t"];
        if (!tv.is_object()) {
            throw std::invalid_argument("\"t\" must be an object of multiplicity counts");
        }
        for (const auto& [key, value] : tv.items()) {
            const Integer r = parse_integer(key);
            const Integer count = json_to_integer(value);
            if (count == 0) {
                continue;
            }
            t.set(r, count); // rejects r < 2 and negative counts
        }
    }
    return ArrangementClass{ComponentSpec(std::move(groups)), t};
}

std::vector<ProjectiveLine> parse_lines_file(const std::string& text) {
    const nlohmann::ordered_json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("lines") || !doc["lines"].is_array()) {
        throw std::invalid_argument("lines file must be an object with a \"lines\" array");
    }
    const auto entry_to_rational = [](const nlohmann::json& value) -> Rational {
        if (value.is_string()) {
            return parse_rational(value.get<std::string>());
        }
        return Rational(json_to_integer(value));
    };
    std::vector<ProjectiveLine> lines;
    for (const auto& triple : doc["lines"]) {
        if (!triple.is_array() || triple.size() != 3) {
            throw std::invalid_argument("each line needs exactly 3 coefficients: " +
                                        triple.dump());
        }
        lines.push_back(ProjectiveLine::from_rational(entry_to_rational(triple[0]),
                                                      entry_to_rational(triple[1]),
                                                      entry_to_rational(triple[2])));
    }
    return lines;
}

nlohmann::ordered_json report_to_json(const InequalityReport& report) {
    nlohmann::ordered_json doc;
    doc["id"] = std::string(kind_name(report.id.kind));
    if (report.id.alpha) {
        doc["alpha"] = rational_string(*report.id.alpha);
    }
    doc["applicable"] = report.applicable;
    if (!report.applicable) {
        doc["reason"] = report.reason;
        return doc;
    }
    doc["lhs"] = rational_string(*report.lhs);
    doc["rhs"] = rational_string(*report.rhs);
    doc["slack"] = rational_string(*report.slack);
    doc["equality"] = report.equality;
    return doc;
}

int AuditDocument::exit_code() const {
    if (!result.identity_valid || result.any_violated()) {
        return 2;
    }
    for (const auto& report : alpha_reports) {
        if (report.violated()) {
            return 2;
        }
    }
    if (lmy && !lmy->satisfied) {
        return 2;
    }
    return 0;
}

AuditDocument build_audit_document(const ArrangementClass& a,
                                   const std::optional<Rational>& alpha) {
    AuditDocument doc{a, audit(a), try_alpha_interval(a), std::nullopt, {}, std::nullopt};
    if (alpha && doc.result.identity_valid) {
        doc.alpha = alpha;
        doc.alpha_reports.push_back(check_line_conic_parametric(a, *alpha));
        doc.alpha_reports.push_back(check_equal_degree_parametric(a, *alpha));
        doc.lmy = lmy_global_check(a, *alpha);
    }
    return doc;
}

nlohmann::ordered_json audit_to_json(const AuditDocument& doc) {
    nlohmann::ordered_json out;
    out["class"] = class_to_json(doc.arrangement);

    auto& identity = out["identity"];
    identity["valid"] = doc.result.identity_valid;
    identity["point_pairs"] = integer_to_json(doc.arrangement.t.point_pair_sum());
    identity["component_pairs"] = integer_to_json(pair_count(doc.arrangement));

    if (doc.interval) {
        out["alpha_interval"]["lo"] = rational_string(doc.interval->lo);
        out["alpha_interval"]["hi"] = rational_string(doc.interval->hi);
    } else {
        out["alpha_interval"] = nullptr;
    }

    auto& reports = out["reports"];
    reports = nlohmann::ordered_json::array();
    for (const auto& report : doc.result.reports) {
        reports.push_back(report_to_json(report));
    }

    if (doc.alpha) {
        out["alpha"] = rational_string(*doc.alpha);
        auto& alpha_reports = out["alpha_reports"];
        alpha_reports = nlohmann::ordered_json::array();
        for (const auto& report : doc.alpha_reports) {
            alpha_reports.push_back(report_to_json(report));
        }
    }
    if (doc.lmy) {
        auto& lmy = out["lmy_global"];
        lmy["lhs"] = rational_string(doc.lmy->lhs);
        lmy["rhs"] = rational_string(doc.lmy->rhs);
        lmy["satisfied"] = doc.lmy->satisfied;
    }
    return out;
}

namespace {

std::string describe_class(const ArrangementClass& a) {
    std::string s = "components:";
    for (const auto& g : a.components.groups()) {
        s += " " + to_string(g.count) + " of degree " + to_string(g.degree);
    }
    s += "; t = {";
    bool first = true;
    for (const auto& [r, c] : a.t.counts()) {
        if (!first) {
            s += ", ";
        }
        first = false;
        s += to_string(r) + ": " + to_string(c);
    }
    s += "}";
    return s;
}

std::vector<std::vector<std::string>> report_rows(const std::vector<InequalityReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& report : reports) {
        std::vector<std::string> row;
        row.push_back(to_string(report.id));
        if (!report.applicable) {
            row.push_back("n/a");
            row.push_back(report.reason);
        } else {
            row.push_back(report.violated() ? "VIOLATED" : "ok");
            row.push_back("lhs " + to_string(*report.lhs) + "  rhs " + to_string(*report.rhs) +
                          "  slack " + to_string(*report.slack) +
                          (report.equality ? "  (equality)" : ""));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void append_rows(std::string& out, const std::vector<std::vector<std::string>>& rows) {
    std::size_t id_width = 0;
    std::size_t status_width = 0;
    for (const auto& row : rows) {
        id_width = std::max(id_width, row[0].size());
        status_width = std::max(status_width, row[1].size());
    }
    for (const auto& row : rows) {
        out += "  " + row[0] + std::string(id_width - row[0].size(), ' ');
        out += "  " + row[1] + std::string(status_width - row[1].size(), ' ');
        out += "  " + row[2] + "\n";
    }
}

std::string csv_quote(const std::string& s) {
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') {
            quoted += "\"\"";
        }
        quoted += c;
    }
    quoted += "\"";
    return quoted;
}

void append_csv_rows(std::string& out, const std::vector<InequalityReport>& reports) {
    for (const auto& report : reports) {
        out += std::string(kind_name(report.id.kind));
        out += ',';
        out += report.id.alpha ? to_string(*report.id.alpha) : "";
        out += ',';
        out += report.applicable ? "true" : "false";
        out += ',';
        out += csv_quote(report.reason);
        out += ',';
        out += report.applicable ? to_string(*report.lhs) : "";
        out += ',';
        out += report.applicable ? to_string(*report.rhs) : "";
        out += ',';
        out += report.applicable ? to_string(*report.slack) : "";
        out += ',';
        out += report.equality ? "true" : "false";
        out += '\n';
    }
}

} // namespace

std::string audit_to_table(const AuditDocument& doc) {
    std::string out = describe_class(doc.arrangement) + "\n";
    if (doc.result.identity_valid) {
        out += "identity: valid (" + to_string(doc.arrangement.t.point_pair_sum()) +
               " point pairs = " + to_string(pair_count(doc.arrangement)) + " component pairs)\n";
    } else {
        out += "identity violated: " + to_string(doc.arrangement.t.point_pair_sum()) + " != " +
               to_string(pair_count(doc.arrangement)) + "\n";
    }
    if (doc.interval) {
        out += "alpha interval: [" + to_string(doc.interval->lo) + ", " +
               to_string(doc.interval->hi) + "]\n";
    } else {
        out += "alpha interval: empty (r_max exceeds 2/3 of the total degree)\n";
    }
    append_rows(out, report_rows(doc.result.reports));
    if (doc.alpha) {
        out += "at alpha = " + to_string(*doc.alpha) + ":\n";
        append_rows(out, report_rows(doc.alpha_reports));
    }
    if (doc.lmy) {
        out += "lmy_global: lhs " + to_string(doc.lmy->lhs) + "  rhs " + to_string(doc.lmy->rhs) +
               (doc.lmy->satisfied ? "  satisfied" : "  VIOLATED") + "\n";
    }
    return out;
}

std::string audit_to_csv(const AuditDocument& doc) {
    std::string out = "id,alpha,applicable,reason,lhs,rhs,slack,equality\n";
    append_csv_rows(out, doc.result.reports);
    append_csv_rows(out, doc.alpha_reports);
    return out;
}

} // namespace arraudit
