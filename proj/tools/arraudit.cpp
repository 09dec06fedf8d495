#include "arraudit/core.hpp"
#include "arraudit/geometry.hpp"
#include "arraudit/inequalities.hpp"
#include "arraudit/io.hpp"
#include "arraudit/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace arraudit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Owns the choice between standard output and --output PATH.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw std::runtime_error("cannot write " + path);
            }
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

std::vector<InequalityKind> parse_filters(const std::string& text) {
    if (text == "all") {
        return all_inequality_kinds();
    }
    if (text == "none") {
        return {};
    }
    std::vector<InequalityKind> filters;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto kind = kind_from_name(item);
        if (!kind) {
            throw std::invalid_argument("unknown filter '" + item + "'");
        }
        filters.push_back(*kind);
    }
    return filters;
}

int run_audit(const std::string& path, const std::string& alpha_text, const std::string& format,
              const std::string& output_path) {
    const ArrangementClass a = parse_arrangement(read_file(path));
    std::optional<Rational> alpha;
    if (!alpha_text.empty()) {
        alpha = parse_rational(alpha_text);
    }
    const AuditDocument doc = build_audit_document(a, alpha);

    OutputSink sink(output_path);
    if (format == "json") {
        sink.stream() << audit_to_json(doc).dump(2) << "\n";
    } else if (format == "csv") {
        sink.stream() << audit_to_csv(doc);
    } else {
        sink.stream() << audit_to_table(doc);
    }
    if (!doc.result.identity_valid) {
        std::cerr << "identity violated: " << to_string(a.t.point_pair_sum()) << " != "
                  << to_string(pair_count(a)) << "\n";
    }
    return doc.exit_code();
}

int emit_class_file(const ArrangementClass& a, const std::string& format,
                    const std::string& output_path) {
    if (format == "csv") {
        return usage_error("csv cannot represent a class file; use json or table");
    }
    OutputSink sink(output_path);
    sink.stream() << serialize_class(a);
    return 0;
}

int run_generate(const std::string& name, const std::optional<std::string>& param,
                 const std::string& format, const std::string& output_path) {
    std::optional<Integer> value;
    if (param) {
        value = parse_integer(*param);
    }
    return emit_class_file(catalog(name, value), format, output_path);
}

int run_intersect(const std::string& path, const std::string& format,
                  const std::string& output_path) {
    const std::vector<ProjectiveLine> lines = parse_lines_file(read_file(path));
    return emit_class_file(t_vector_from_lines(lines), format, output_path);
}

void print_search_summary(std::ostream& out, const SearchResult& result,
                          const std::string& format) {
    std::size_t eliminated = 0;
    for (const auto& [kind, count] : result.eliminated_by) {
        eliminated += count;
    }
    if (format == "json") {
        nlohmann::ordered_json summary;
        summary["examined"] = result.examined;
        summary["survivors"] = result.survivors.size();
        summary["eliminated"] = eliminated;
        auto& by = summary["eliminated_by"];
        by = nlohmann::ordered_json::object();
        for (const auto& [kind, count] : result.eliminated_by) {
            by[std::string(kind_name(kind))] = count;
        }
        summary["truncated"] = result.truncated;
        nlohmann::ordered_json wrapper;
        wrapper["summary"] = std::move(summary);
        out << wrapper.dump() << "\n";
    } else {
        out << "examined " << result.examined << "  survivors " << result.survivors.size()
            << "  eliminated " << eliminated;
        for (const auto& [kind, count] : result.eliminated_by) {
            out << "  (" << kind_name(kind) << ": " << count << ")";
        }
        if (result.truncated) {
            out << "  [truncated at limit]";
        }
        out << "\n";
    }
}

std::string compact_tvector(const TVector& t) {
    std::string s = "{";
    bool first = true;
    for (const auto& [r, c] : t.counts()) {
        if (!first) {
            s += ", ";
        }
        first = false;
        s += "t" + to_string(r) + ": " + to_string(c);
    }
    s += "}";
    return s;
}

int run_search(const SearchSpec& spec, const std::string& format,
               const std::string& output_path) {
    if (format == "csv") {
        return usage_error("csv search output is not supported; use json or table");
    }
    OutputSink sink(output_path);
    std::ostream& out = sink.stream();
    const SearchResult result = search_feasible(spec, [&](const ArrangementClass& survivor) {
        if (format == "json") {
            out << class_to_json(survivor).dump() << "\n";
        } else {
            out << "survivor: t = " << compact_tvector(survivor.t) << "\n";
        }
    });
    print_search_summary(out, result, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic auditor for plane curve arrangement combinatorics"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format,-f", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    std::string output_path;
    app.add_option("--output,-o", output_path, "Write to this file instead of standard output");

    auto* audit_cmd =
        app.add_subcommand("audit", "Evaluate every inequality for an arrangement-class file");
    std::string audit_path;
    audit_cmd->add_option("path", audit_path, "Arrangement-class JSON file")->required();
    std::string alpha_text;
    audit_cmd->add_option("--alpha", alpha_text,
                          "Also evaluate the parametric checks and the global inequality at this "
                          "weight (\"p/q\")");

    auto* generate_cmd =
        app.add_subcommand("generate", "Print a named catalog arrangement as a class file");
    std::string generate_name;
    std::string catalog_help = "One of:";
    for (const auto& name : catalog_names()) {
        catalog_help += " " + name;
    }
    generate_cmd->add_option("name", generate_name, catalog_help)->required();
    std::string generate_param;
    generate_cmd->add_option("param", generate_param,
                             "Integer parameter (fermat, generic_lines, pencil)");

    auto* intersect_cmd = app.add_subcommand(
        "intersect", "Derive the combinatorial class of a rational line arrangement");
    std::string lines_path;
    intersect_cmd->add_option("path", lines_path, "Lines JSON file")->required();

    auto* search_cmd =
        app.add_subcommand("search", "Enumerate t-vectors surviving the selected inequalities");
    std::string lines_k;
    search_cmd->add_option("--lines", lines_k, "Search arrangements of K lines");
    std::vector<std::string> equal_degree_args;
    search_cmd->add_option("--equal-degree", equal_degree_args, "Search K curves of degree D")
        ->expected(2);
    std::vector<std::string> line_conic_args;
    search_cmd->add_option("--line-conic", line_conic_args, "Search L lines plus K conics")
        ->expected(2);
    std::string filters_text = "all";
    search_cmd->add_option("--filters", filters_text, "all, none, or comma-separated check names")
        ->capture_default_str();
    std::string r_cap_text;
    search_cmd->add_option("--r-cap", r_cap_text, "Multiplicity ceiling");
    std::string policy_text = "pass";
    search_cmd
        ->add_option("--policy", policy_text,
                     "pass: gated-out checks cannot eliminate; require: candidates outside a "
                     "gate leave the search space")
        ->check(CLI::IsMember({"pass", "require"}))
        ->capture_default_str();
    std::size_t limit = 0;
    auto* limit_opt = search_cmd->add_option("--limit", limit, "Stop after this many survivors");

    for (auto* sub : {audit_cmd, generate_cmd, intersect_cmd, search_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*audit_cmd) {
            return run_audit(audit_path, alpha_text, format, output_path);
        }
        if (*generate_cmd) {
            const std::optional<std::string> param =
                generate_cmd->count("param") > 0 ? std::optional<std::string>(generate_param)
                                                 : std::nullopt;
            return run_generate(generate_name, param, format, output_path);
        }
        if (*intersect_cmd) {
            return run_intersect(lines_path, format, output_path);
        }
        if (*search_cmd) {
            const int modes = (search_cmd->count("--lines") > 0) +
                              (search_cmd->count("--equal-degree") > 0) +
                              (search_cmd->count("--line-conic") > 0);
            if (modes != 1) {
                return usage_error(
                    "search needs exactly one of --lines, --equal-degree, --line-conic");
            }
            SearchSpec spec = SearchSpec::lines(0);
            if (search_cmd->count("--lines") > 0) {
                spec = SearchSpec::lines(parse_integer(lines_k));
            } else if (search_cmd->count("--equal-degree") > 0) {
                spec = SearchSpec::equal_degree(parse_integer(equal_degree_args[0]),
                                                parse_integer(equal_degree_args[1]));
            } else {
                spec = SearchSpec::line_conic(parse_integer(line_conic_args[0]),
                                              parse_integer(line_conic_args[1]));
            }
            spec.filters = parse_filters(filters_text);
            if (!r_cap_text.empty()) {
                spec.r_cap = parse_integer(r_cap_text);
            }
            spec.policy = policy_text == "require" ? FilterPolicy::RequireApplicable
                                                   : FilterPolicy::PassThrough;
            if (limit_opt->count() > 0) {
                spec.limit = limit;
            }
            return run_search(spec, format, output_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return usage_error("no subcommand given");
}
