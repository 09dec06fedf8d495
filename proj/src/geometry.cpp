#include "arraudit/geometry.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace arraudit {

Triple canonical_triple(Triple raw) {
    Integer g = 0;
    for (const auto& v : raw) {
        g = gcd(g, v);
    }
    if (g == 0) {
        throw std::invalid_argument("zero triple has no projective meaning");
    }
    for (auto& v : raw) {
        v /= g;
    }
    for (const auto& v : raw) {
        if (v != 0) {
            if (v < 0) {
                for (auto& w : raw) {
                    w = -w;
                }
            }
            break;
        }
    }
    return raw;
}

ProjectiveLine::ProjectiveLine(Integer a, Integer b, Integer c)
    : coeffs_(canonical_triple({std::move(a), std::move(b), std::move(c)})) {}

ProjectiveLine::ProjectiveLine(const Triple& coeffs) : coeffs_(canonical_triple(coeffs)) {}

ProjectiveLine ProjectiveLine::from_rational(const Rational& a, const Rational& b,
                                             const Rational& c) {
    Integer m = lcm(lcm(denominator(a), denominator(b)), denominator(c));
    const auto scale = [&m](const Rational& v) -> Integer {
        return numerator(v) * (m / denominator(v));
    };
    return ProjectiveLine(scale(a), scale(b), scale(c));
}

ProjectivePoint::ProjectivePoint(Integer x, Integer y, Integer z)
    : coords_(canonical_triple({std::move(x), std::move(y), std::move(z)})) {}

ProjectivePoint::ProjectivePoint(const Triple& coords) : coords_(canonical_triple(coords)) {}

namespace {

std::string triple_string(const Triple& t, char open, char close, const char* sep) {
    std::string s;
    s += open;
    s += to_string(t[0]);
    s += sep;
    s += to_string(t[1]);
    s += sep;
    s += to_string(t[2]);
    s += close;
    return s;
}

} // namespace

std::string to_string(const ProjectiveLine& line) {
    return triple_string(line.coeffs(), '[', ']', ", ");
}

std::string to_string(const ProjectivePoint& point) {
    return triple_string(point.coords(), '[', ']', " : ");
}

bool incident(const ProjectivePoint& point, const ProjectiveLine& line) {
    const auto& p = point.coords();
    const auto& l = line.coeffs();
    return p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == 0;
}

ProjectivePoint line_intersection(const ProjectiveLine& l1, const ProjectiveLine& l2) {
    if (l1 == l2) {
        throw std::invalid_argument("identical lines " + to_string(l1) +
                                    " have no unique intersection");
    }
    const auto& a = l1.coeffs();
    const auto& b = l2.coeffs();
    return ProjectivePoint(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                           a[0] * b[1] - a[1] * b[0]);
}

ArrangementClass t_vector_from_lines(const std::vector<ProjectiveLine>& lines) {
    if (lines.size() < 2) {
        throw std::invalid_argument("need at least 2 lines, got " +
                                    std::to_string(lines.size()));
    }
    std::set<ProjectiveLine> distinct(lines.begin(), lines.end());
    if (distinct.size() != lines.size()) {
        throw std::invalid_argument("duplicate lines in input");
    }

    std::map<ProjectivePoint, std::set<std::size_t>> through;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto& members = through[line_intersection(lines[i], lines[j])];
            members.insert(i);
            members.insert(j);
        }
    }

    TVector t;
    for (const auto& [point, members] : through) {
        t.add(Integer(members.size()), 1);
    }
    return ArrangementClass{ComponentSpec::lines(Integer(lines.size())), t};
}

} // namespace arraudit
