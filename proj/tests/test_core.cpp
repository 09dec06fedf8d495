#include "arraudit/core.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace arraudit;

TEST_SUITE("core") {

TEST_CASE("t-vector stores sparse positive counts") {
    TVector t;
    CHECK(t.empty());
    CHECK(t.at(2) == 0);
    CHECK(!t.r_max());

    t.set(3, 28);
    t.set(4, 21);
    CHECK(t.at(3) == 28);
    CHECK(t.at(4) == 21);
    CHECK(*t.r_max() == 4);

    t.set(4, 0);
    CHECK(t.at(4) == 0);
    CHECK(*t.r_max() == 3);
    CHECK(t.counts().size() == 1);

    t.add(3, -28);
    CHECK(t.empty());
}

TEST_CASE("t-vector rejects bad keys and counts") {
    TVector t;
    CHECK_THROWS_AS(t.set(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.set(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(t.add(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(TVector({{1, 1}}), std::invalid_argument);
}

TEST_CASE("point_pair_sum weights each point by its pairs") {
    const TVector klein({{3, 28}, {4, 21}});
    CHECK(klein.point_pair_sum() == 28 * 3 + 21 * 6);
    CHECK(klein.point_pair_sum() == 210);
    CHECK(TVector{}.point_pair_sum() == 0);
}

TEST_CASE("component spec validates and aggregates") {
    const ComponentSpec mixed({DegreeGroup{1, 2}, DegreeGroup{2, 3}});
    CHECK(mixed.total_count() == 5);
    CHECK(mixed.total_degree() == 8);
    CHECK(!mixed.uniform_degree());
    CHECK(!mixed.is_lines());
    CHECK(mixed.is_line_conic());
    CHECK(mixed.count_of_degree(1) == 2);
    CHECK(mixed.count_of_degree(2) == 3);
    CHECK(mixed.count_of_degree(3) == 0);

    const ComponentSpec cubics = ComponentSpec::equal_degree(3, 4);
    CHECK(*cubics.uniform_degree() == 3);
    CHECK(!cubics.is_line_conic());

    CHECK(ComponentSpec::lines(5).is_lines());
    CHECK(*ComponentSpec::lines(5).uniform_degree() == 1);

    CHECK_THROWS_AS(ComponentSpec({}), std::invalid_argument);
    CHECK_THROWS_AS(ComponentSpec({DegreeGroup{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ComponentSpec({DegreeGroup{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ComponentSpec::lines(0), std::invalid_argument);
}

TEST_CASE("f-numbers are multiplicity moments") {
    const ArrangementClass klein = catalog("klein");
    CHECK(f_number(klein, 0) == 49);
    CHECK(f_number(klein, 1) == 168);
    CHECK(f_number(klein, 2) == 588);

    const ArrangementClass empty{ComponentSpec::lines(1), TVector{}};
    CHECK(f_number(empty, 0) == 0);
    CHECK(f_number(empty, 1) == 0);
    CHECK(f_number(empty, 2) == 0);

    const ArrangementClass wiman = catalog("wiman");
    CHECK(f_number(wiman, 1) == 720);

    CHECK_THROWS_AS(f_number(klein, 3), std::invalid_argument);
    CHECK_THROWS_AS(f_number(klein, -1), std::invalid_argument);
}

TEST_CASE("f-numbers grow by r^i when a point is added") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 50; ++i) {
        ArrangementClass a = testutil::random_line_class(rng, 3, 12);
        const long r = testutil::rand_in(rng, 2, 9);
        ArrangementClass bumped = a;
        bumped.t.add(r, 1);
        CHECK(f_number(bumped, 0) - f_number(a, 0) == 1);
        CHECK(f_number(bumped, 1) - f_number(a, 1) == r);
        CHECK(f_number(bumped, 2) - f_number(a, 2) == Integer(r) * r);
    }
}

TEST_CASE("pair_count is the Bezout count") {
    CHECK(pair_count(ComponentSpec::lines(21)) == 210);
    CHECK(pair_count(ComponentSpec::line_conic(1, 1)) == 2);
    CHECK(pair_count(ComponentSpec::equal_degree(2, 2)) == 4);
    // l lines and k conics: C(l,2) + 4 C(k,2) + 2kl
    CHECK(pair_count(ComponentSpec::line_conic(3, 2)) == 3 + 4 + 12);
}

TEST_CASE("pair_count ignores group order") {
    const ComponentSpec forward({DegreeGroup{1, 2}, DegreeGroup{2, 3}});
    const ComponentSpec backward({DegreeGroup{2, 3}, DegreeGroup{1, 2}});
    CHECK(pair_count(forward) == pair_count(backward));
    // splitting a group changes nothing either
    const ComponentSpec split({DegreeGroup{1, 1}, DegreeGroup{1, 1}, DegreeGroup{2, 3}});
    CHECK(pair_count(split) == pair_count(forward));
}

TEST_CASE("validate_identity checks the pair bookkeeping") {
    CHECK(validate_identity(catalog("klein")));
    CHECK(validate_identity(catalog("wiman")));
    const ArrangementClass bad{ComponentSpec::lines(3), TVector({{2, 2}})};
    CHECK(!validate_identity(bad));
}

TEST_CASE("milnor numbers of ordinary points") {
    CHECK(milnor_ordinary(2) == 1);
    CHECK(milnor_ordinary(3) == 4);
    CHECK(milnor_ordinary(5) == 16);
    CHECK_THROWS_AS(milnor_ordinary(1), std::domain_error);
}

TEST_CASE("euler number of the reduced curve") {
    const ArrangementClass conic{ComponentSpec::equal_degree(2, 1), TVector{}};
    CHECK(euler_reduced_curve(conic) == 2);

    const ArrangementClass concurrent{ComponentSpec::lines(3), TVector({{3, 1}})};
    CHECK(euler_reduced_curve(concurrent) == 4);

    CHECK(euler_reduced_curve(catalog("klein")) == -77);

    const ArrangementClass bad{ComponentSpec::lines(3), TVector({{2, 2}})};
    CHECK_THROWS_WITH_AS(euler_reduced_curve(bad),
                         "not a consistent transversal arrangement: 2 != 3", std::domain_error);
}

TEST_CASE("euler number of generic lines in closed form") {
    for (long k = 2; k <= 9; ++k) {
        const Integer expected = -Integer(k) * (k - 3) + choose2(k);
        CHECK(euler_reduced_curve(catalog("generic_lines", Integer(k))) == expected);
    }
}

TEST_CASE("catalog reproduces the published combinatorics") {
    const ArrangementClass klein = catalog("klein");
    CHECK(klein.components.total_count() == 21);
    CHECK(klein.components.is_lines());
    CHECK(klein.t == TVector({{3, 28}, {4, 21}}));

    const ArrangementClass icosa = catalog("icosahedron");
    CHECK(icosa.components.total_count() == 15);
    CHECK(icosa.t == TVector({{2, 15}, {3, 10}, {5, 6}}));

    const ArrangementClass hesse = catalog("hesse");
    CHECK(hesse.components.total_count() == 12);
    CHECK(hesse.t == TVector({{2, 12}, {4, 9}}));

    const ArrangementClass ext = catalog("extended_hesse");
    CHECK(ext.components.total_count() == 21);
    CHECK(ext.t == TVector({{2, 36}, {4, 9}, {5, 12}}));

    const ArrangementClass wiman = catalog("wiman");
    CHECK(wiman.components.total_count() == 45);
    CHECK(wiman.t == TVector({{3, 120}, {4, 45}, {5, 36}}));

    const ArrangementClass pencil = catalog("pencil", Integer(4));
    CHECK(pencil.components.total_count() == 4);
    CHECK(pencil.t == TVector({{4, 1}}));

    const ArrangementClass generic = catalog("generic_lines", Integer(6));
    CHECK(generic.t == TVector({{2, 15}}));
    CHECK(catalog("generic_lines", Integer(1)).t.empty());
}

TEST_CASE("fermat merges the n-fold points into t3 at n = 3") {
    const ArrangementClass f3 = catalog("fermat", Integer(3));
    CHECK(f3.components.total_count() == 9);
    CHECK(f3.t == TVector({{3, 12}}));

    const ArrangementClass f4 = catalog("fermat", Integer(4));
    CHECK(f4.components.total_count() == 12);
    CHECK(f4.t == TVector({{3, 16}, {4, 3}}));

    const ArrangementClass f7 = catalog("fermat", Integer(7));
    CHECK(f7.t == TVector({{3, 49}, {7, 3}}));
}

TEST_CASE("catalog rejects bad requests") {
    CHECK_THROWS_AS(catalog("fermat", Integer(2)), std::invalid_argument);
    CHECK_THROWS_AS(catalog("fermat"), std::invalid_argument);
    CHECK_THROWS_AS(catalog("generic_lines", Integer(0)), std::invalid_argument);
    CHECK_THROWS_AS(catalog("pencil", Integer(1)), std::invalid_argument);
    CHECK_THROWS_AS(catalog("klein", Integer(3)), std::invalid_argument);
    CHECK_THROWS_AS(catalog("unknown_thing"), std::invalid_argument);
}

TEST_CASE("every catalog entry satisfies the identity") {
    for (const auto& name : catalog_names()) {
        if (name == "fermat") {
            for (long n = 3; n <= 10; ++n) {
                CHECK(validate_identity(catalog(name, Integer(n))));
            }
        } else if (name == "generic_lines") {
            for (long k = 1; k <= 12; ++k) {
                CHECK(validate_identity(catalog(name, Integer(k))));
            }
        } else if (name == "pencil") {
            for (long k = 2; k <= 12; ++k) {
                CHECK(validate_identity(catalog(name, Integer(k))));
            }
        } else {
            CHECK(validate_identity(catalog(name)));
        }
    }
}

TEST_CASE("random consistent classes satisfy the identity by construction") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 200; ++i) {
        CHECK(validate_identity(testutil::random_line_class(rng, 2, 12)));
        CHECK(validate_identity(testutil::random_equal_degree_class(rng, 1, 4, 1, 6)));
        CHECK(validate_identity(testutil::random_line_conic_class(rng, 8, 5)));
    }
}

} // TEST_SUITE
