#include <random>

#include "dbl/lie.hpp"
#include "dbl/uea.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dbl;

namespace {

Rational coefficient(const LinearCombination& v, int index) {
    for (const auto& [i, c] : v) {
        if (i == index) return c;
    }
    return 0;
}

int index_of(const DoubleData& dd, const std::string& name) { return dd.algebra.basis().index(name); }

}  // namespace

TEST_SUITE("lie_constructor") {
    TEST_CASE("sqed double: basis gradings and brackets") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        const auto& B = dd.algebra.basis();
        REQUIRE(B.size() == 4);
        const int x = index_of(dd, "x"), pp = index_of(dd, "psi+1"), pm = index_of(dd, "psi-1"), t = index_of(dd, "t_x");
        CHECK(B.degree(pp) == 1);
        CHECK(B.degree(t) == 2);
        CHECK(dd.algebra.bracket(x, pp) == LinearCombination{{pp, 1}});
        CHECK(dd.algebra.bracket(x, pm) == LinearCombination{{pm, -1}});
        CHECK(dd.algebra.bracket(pp, pm) == LinearCombination{{t, -1}});
        CHECK(dd.algebra.bracket(x, t).empty());
    }

    TEST_CASE("sl2 fundamental: brackets with psi+ read off the matrices") {
        const DoubleData dd = fixtures::double_of(fixtures::sl2());
        const int e = index_of(dd, "e"), h = index_of(dd, "h"), p1 = index_of(dd, "psi+1"), p2 = index_of(dd, "psi+2");
        CHECK(coefficient(dd.algebra.bracket(e, p2), p1) == 1);
        CHECK(coefficient(dd.algebra.bracket(h, p1), p1) == 1);
        CHECK(coefficient(dd.algebra.bracket(h, p2), p2) == -1);
        CHECK(dd.algebra.bracket(e, p1).empty());
    }

    TEST_CASE("every fixture: Jacobi, invariant form and CYBE") {
        for (const auto& in : fixtures::all()) {
            CAPTURE(in.name);
            const DoubleData dd = fixtures::double_of(in);
            CHECK(check_jacobi(dd.algebra).pass());
            CHECK(check_invariant_form(dd.algebra, dd.kappa).pass());
            CHECK(check_cybe(classical_r(dd), dd.algebra).pass());
            CHECK(check_semidirect(dd, positive_subalgebra(dd)).pass());
        }
    }

    TEST_CASE("random diagonal torus actions give valid doubles") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> charge(-3, 3);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 1 + trial % 3;
            RepresentationData rho{n, {std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))}};
            for (int i = 0; i < n; ++i) rho.matrices[0][i][i] = charge(rng);
            const DoubleData dd = build_double(make_lie_algebra({"x"}, {}), rho);
            CHECK(check_jacobi(dd.algebra).pass());
            CHECK(check_cybe(classical_r(dd), dd.algebra).pass());
        }
    }

    TEST_CASE("matrices that do not represent the algebra are rejected") {
        auto in = fixtures::sl2();
        std::swap(in.rho.matrices[0], in.rho.matrices[2]);
        CHECK_THROWS_AS(build_h(in.g, in.rho), InvalidRepresentation);
        CHECK_THROWS(make_lie_algebra({"a", "a"}, {}));
    }

    TEST_CASE("a dropped r term breaks CYBE") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        SparseTensor r = classical_r(dd);
        r.add({index_of(dd, "x"), index_of(dd, "t_x")}, Rational(-1));
        CHECK_FALSE(check_cybe(r, dd.algebra).pass());
    }

    TEST_CASE("cobracket of psi-") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        const int pm = index_of(dd, "psi-1"), t = index_of(dd, "t_x");
        const SparseTensor delta = cobracket(dd.algebra, classical_r(dd), pm);
        CHECK(delta.at({pm, t})[0] == 1);
        CHECK(delta.at({t, pm})[0] == -1);
        CHECK(delta.entries().size() == 2);
    }
}

TEST_SUITE("uea_pbw") {
    TEST_CASE("normal form of psi- psi+") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        const Uea U(dd.algebra, 2);
        const int pp = index_of(dd, "psi+1"), pm = index_of(dd, "psi-1"), t = index_of(dd, "t_x");
        const UEAElement v = U.normal_form({pm, pp}, TruncatedSeries(2, 1));
        UEAElement expected(1, 2);
        expected.add(UEAElement::Key{{pp, pm}}, Rational(-1));
        expected.add(UEAElement::Key{{t}}, Rational(-1));
        CHECK(v == expected);
        CHECK(U.normal_form({pp, pp}, TruncatedSeries(2, 1)).is_zero());
    }

    TEST_CASE("sqed Casimir") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        const Uea U(dd.algebra, 1);
        const int x = index_of(dd, "x"), pp = index_of(dd, "psi+1"), pm = index_of(dd, "psi-1"), t = index_of(dd, "t_x");
        UEAElement expected(1, 1);
        expected.add(UEAElement::Key{{x, t}}, Rational(1));
        expected.add(UEAElement::Key{{pp, pm}}, Rational(1));
        expected.add(UEAElement::Key{{t}}, Rational(1, 2));
        CHECK(casimir(U, dd) == expected);
    }

    TEST_CASE("every fixture: Casimir is central and the omega identity holds") {
        for (const auto& in : fixtures::all()) {
            CAPTURE(in.name);
            const DoubleData dd = fixtures::double_of(in);
            const Uea U(dd.algebra, 1);
            CHECK(check_casimir_central(U, casimir(U, dd)).pass());
            CHECK(check_omega_identity(dd).pass());
        }
    }

    TEST_CASE("sqed omega from r by hand") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        const Uea U(dd.algebra, 1);
        const int x = index_of(dd, "x"), pp = index_of(dd, "psi+1"), pm = index_of(dd, "psi-1"), t = index_of(dd, "t_x");
        UEAElement expected(2, 1);
        const Rational half(1, 2);
        expected.add(UEAElement::Key{{x}, {t}}, half);
        expected.add(UEAElement::Key{{t}, {x}}, half);
        expected.add(UEAElement::Key{{pp}, {pm}}, half);
        expected.add(UEAElement::Key{{pm}, {pp}}, -half);
        CHECK(omega(U, classical_r(dd)) == expected);
    }

    TEST_CASE("PBW product is associative on random words") {
        const DoubleData dd = fixtures::double_of(fixtures::sl2());
        const Uea U(dd.algebra, 1);
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> pick(0, dd.algebra.dim() - 1);
        for (int trial = 0; trial < 15; ++trial) {
            const UEAElement a = U.generator(pick(rng));
            const UEAElement b = U.multiply(U.generator(pick(rng)), U.generator(pick(rng)));
            const UEAElement c = U.generator(pick(rng));
            CHECK(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)));
        }
    }
}
