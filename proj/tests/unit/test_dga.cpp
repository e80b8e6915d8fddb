#include <set>

#include "dbl/dga.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dbl;

namespace {

// Monomials v^a v*^b with a + b = degree, encoded as a.
int count_monomials(int degree) { return degree < 0 ? 0 : degree + 1; }

// Rank of multiplication by v v* from polynomials of degree w - 2 to degree w:
// distinct monomials have distinct images, so the rank is the size of the image set.
int multiplication_rank(int w) {
    std::set<std::pair<int, int>> image;
    for (int a = 0; a <= w - 2; ++a) image.insert({a + 1, (w - 2 - a) + 1});
    return static_cast<int>(image.size());
}

}  // namespace

TEST_SUITE("moment_dga") {
    TEST_CASE("every fixture: moment DGA equals CE of the positive part") {
        for (const auto& in : fixtures::all()) {
            CAPTURE(in.name);
            const DoubleData dd = fixtures::double_of(in);
            CHECK(check_moment_equals_ce(dd).pass());
            const CommutativeDGA moment = build_moment_dga(in.g, in.rho);
            CHECK(check_dga(moment).pass());
            CHECK(check_euler_characteristic(moment, 5).pass());
        }
    }

    TEST_CASE("sqed moment generators and differential") {
        const auto in = fixtures::sqed1();
        const CommutativeDGA moment = build_moment_dga(in.g, in.rho);
        REQUIRE(moment.size() == 3);
        CHECK(moment.generators().degree(2) == -1);
        CHECK(moment.generators().weight(2) == 2);
        CHECK(moment.differential(2) == Polynomial{{Monomial{0, 1}, Rational(1)}});
    }

    TEST_CASE("sqed cohomology against the multiplication oracle") {
        const auto in = fixtures::sqed1();
        const CommutativeDGA moment = build_moment_dga(in.g, in.rho);
        const CohomologyReport report = cohomology(moment, {0, 6}, {-1, 0});
        const auto dim = [&](int degree, int weight) {
            const auto it = report.dimensions.find({degree, weight});
            return it == report.dimensions.end() ? 0 : it->second;
        };
        const int expected_h0[] = {1, 2, 2, 2};
        for (int w = 0; w <= 3; ++w) CHECK(dim(0, w) == expected_h0[w]);
        for (int w = 0; w <= 6; ++w) {
            CAPTURE(w);
            const int rank = multiplication_rank(w);
            CHECK(dim(-1, w) == count_monomials(w - 2) - rank);
            CHECK(dim(0, w) == count_monomials(w) - rank);
            CHECK(dim(-1, w) == 0);
        }
    }

    TEST_CASE("trivial group: polynomial functions on V") {
        const auto in = fixtures::gzero();
        const CommutativeDGA moment = build_moment_dga(in.g, in.rho);
        const CohomologyReport report = cohomology(moment, {0, 4}, {0, 0});
        for (int w = 0; w <= 4; ++w) CHECK(report.dimensions.at({0, w}) == w + 1);
    }

    TEST_CASE("fiber L-infinity algebras") {
        FiberMap cube{1, {Polynomial{{Monomial{0, 0, 0}, Rational(1)}}}, {"v"}};
        const FiberLinfty cubic = build_fiber_linfty(cube);
        CHECK(cubic.top_arity() == 3);
        CHECK(check_fiber_linfty(cubic, 9).pass());

        FiberMap linear{1, {Polynomial{{Monomial{0}, Rational(1)}}}, {"v"}};
        CHECK(build_fiber_linfty(linear).top_arity() == 1);

        for (const auto& in : {fixtures::sqed1(), fixtures::sl2()}) {
            CAPTURE(in.name);
            const FiberLinfty moment_map = build_fiber_linfty(moment_fiber_map(in.g, in.rho));
            CHECK(moment_map.top_arity() == 2);
            CHECK(check_fiber_linfty(moment_map, 6).pass());
            CHECK(check_fiber_cone_point(moment_map, build_moment_dga(in.g, in.rho)).pass());
        }
    }
}
