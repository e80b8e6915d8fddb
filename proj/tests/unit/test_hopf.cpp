#include "dbl/hopf.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dbl;

TEST_SUITE("hopf_double") {
    TEST_CASE("sqed: x is primitive and R starts at r") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        const HopfDouble A(dd, 3, 4);
        const Uea& U = A.uea();
        const int x = dd.algebra.basis().index("x");
        const UEAElement expected = U.tensor({U.generator(x), U.one()}) + U.tensor({U.one(), U.generator(x)});
        CHECK(A.coproduct_generator(x) == expected);
        CHECK(A.r_matrix().hbar_component(0) == U.one(2).hbar_component(0));
        CHECK(A.r_matrix().hbar_component(1) == U.from_tensor(classical_r(dd)).hbar_component(0));
    }

    TEST_CASE("counit and antipode on generators") {
        const DoubleData dd = fixtures::double_of(fixtures::sl2());
        const HopfDouble A(dd, 2, 4);
        const Uea& U = A.uea();
        for (int g = 0; g < dd.algebra.dim(); ++g) {
            CAPTURE(g);
            CHECK(A.counit(U.generator(g)).is_zero());
        }
        const int e = dd.algebra.basis().index("e");
        CHECK(A.antipode(U.generator(e)) == U.generator(e) * Rational(-1));
    }

    TEST_CASE("every fixture: dual coproduct, cross relations, axioms and ribbon") {
        for (const auto& in : fixtures::all()) {
            CAPTURE(in.name);
            const HopfDouble A(fixtures::double_of(in), 3, 4);
            CHECK(check_dual_coproduct(A).pass());
            CHECK(check_cross_relations(A).pass());
            CHECK(verify_hopf_axioms(A).pass());
            CHECK(verify_ribbon(A).pass());
        }
    }

    TEST_CASE("a non-coassociative perturbation of the coproduct is detected") {
        const DoubleData dd = fixtures::double_of(fixtures::sqed1());
        HopfDouble A(dd, 3, 4);
        const Uea& U = A.uea();
        const int t = dd.algebra.basis().index("t_x");
        UEAElement faulted = U.tensor({U.generator(t), U.one()}) * Rational(2) - A.coproduct_generator(t);
        A.set_coproduct_generator(t, faulted);
        CHECK_FALSE(check_dual_coproduct(A).pass());
    }
}
