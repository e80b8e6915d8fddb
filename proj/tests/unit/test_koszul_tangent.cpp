#include "dbl/koszul.hpp"
#include "dbl/tangent.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dbl;

namespace {

Polynomial single(const Monomial& m, const Rational& c) { return {{m, c}}; }

struct Setup {
    AlgebraSpec spec;
    DoubleData dd;
    KoszulContext context;
    ModuleCatalog catalog;

    explicit Setup(const std::string& name, int order = 3)
        : spec(fixtures::spec(name)),
          dd(build_double(spec.g, spec.rho)),
          context(dd, order),
          catalog(build_catalog(spec, dd, order)) {}
};

}  // namespace

TEST_SUITE("module") {
    TEST_CASE("catalog modules satisfy their relations") {
        for (const char* name : {"trivial", "gzero", "sqed1", "sqed3", "sl2"}) {
            CAPTURE(name);
            const Setup s(name);
            for (const auto& m : s.catalog.modules) {
                CAPTURE(m.name());
                CHECK(check_module(m).pass());
            }
            for (const auto& f : s.catalog.maps) {
                CHECK(check_module_map(f, s.catalog.module(f.source), s.catalog.module(f.target)).pass());
            }
        }
    }

    TEST_CASE("a broken action is rejected") {
        const Setup s("sqed1");
        FiniteModule m = s.catalog.module("V2");
        const int x = s.dd.algebra.basis().index("x");
        SeriesMatrix doubled = m.action(x);
        doubled += m.action(x);
        m.set_action(x, doubled);
        CHECK_FALSE(check_module(m).pass());
        CHECK_THROWS_AS(validate(m), InvalidModule);
    }

    TEST_CASE("tensor product of modules is a module") {
        const Setup s("sl2");
        const FiniteModule& fund = s.catalog.module("fund");
        CHECK(check_module(tensor_product(fund, fund)).pass());
        CHECK(tensor_product(fund, fund).dim() == 4);
    }
}

TEST_SUITE("tangent_koszul") {
    TEST_CASE("F of the trivial module is CE with one generator") {
        const Setup s("sqed1");
        const DGModule F = functor_F(s.context, s.catalog.module("trivial"));
        REQUIRE(F.generators.size() == 1);
        CHECK(F.generators.degree(0) == 0);
        CHECK(F.generators.weight(0) == 0);
        CHECK(is_zero(F.differential[0]));
    }

    TEST_CASE("F of V2 records the psi+ action through its dual generator") {
        const Setup s("sqed1");
        const DGModule F = functor_F(s.context, s.catalog.module("V2"));
        const int m0 = F.generators.index("m0"), m1 = F.generators.index("m1");
        const int xi = s.context.ce()->generators().index("x1");
        const Polynomial& image = F.differential[m1][m0];
        REQUIRE(image.count(Monomial{xi}) == 1);
        CHECK(abs(image.at(Monomial{xi})) == 1);
        CHECK(check_dg_module(F).pass());
    }

    TEST_CASE("G of CE recovers the trivial module") {
        const Setup s("sqed1");
        const DGModule F = functor_F(s.context, s.catalog.module("trivial"));
        const int cap = minimal_weight_cap(F, -4);
        const BigradedDims dims = koszul_dual_cohomology(s.context, F, {-4, 4}, cap);
        CHECK(dims == module_cohomology(s.catalog.module("trivial"), {-4, 4}));
        // One copy of the trivial module per power hbar^k, k < 3, at weight -2k.
        CHECK(dims == BigradedDims{{{0, 0}, 1}, {{0, -2}, 1}, {{0, -4}, 1}});
        CHECK_THROWS_AS(koszul_dual_cohomology(s.context, F, {-4, 4}, cap - 1), WindowRefusal);
    }

    TEST_CASE("every fixture: roundtrip of the trivial and adjoint modules") {
        for (const char* name : {"trivial", "gzero", "sqed1", "sqed3", "sl2"}) {
            CAPTURE(name);
            const Setup s(name);
            for (const char* module : {"trivial", "adjoint"}) {
                CAPTURE(module);
                const FiniteModule& m = s.catalog.module(module);
                const int cap = minimal_weight_cap(functor_F(s.context, m), -4);
                CHECK(check_roundtrip(s.context, m, 4, cap).pass());
            }
        }
    }

    TEST_CASE("monoidality and exactness for sqed") {
        const Setup s("sqed1");
        CHECK(check_monoidality(s.context, s.catalog.module("V2"), s.catalog.module("V2*")).pass());
        CHECK(check_monoidality(s.context, s.catalog.module("adjoint"), s.catalog.module("V2")).pass());
        const ModuleMap& iota = s.catalog.map("iota");
        const ModuleMap& pi = s.catalog.map("pi");
        CHECK(check_exactness(s.context, iota, pi, s.catalog.module("line"), s.catalog.module("V2"),
                              s.catalog.module("trivial"))
                  .pass());
    }

    TEST_CASE("braiding on the trivial module is the identity") {
        const Setup s("sqed1");
        const BraidingData braiding(s.dd, 3);
        const FiniteModule& one = s.catalog.module("trivial");
        CHECK(braiding.braiding(one, one) == SeriesMatrix::identity(1, 3));
        CHECK(braiding.ribbon(one) == SeriesMatrix::identity(1, 3));
    }

    TEST_CASE("sqed braiding checks") {
        const Setup s("sqed1", 4);
        const BraidingData braiding(s.dd, 4);
        const FiniteModule& v = s.catalog.module("V2");
        const FiniteModule& w = s.catalog.module("V2*");
        CHECK(check_braiding_pair(s.context, braiding, v, w).pass());
        CHECK(check_braid_relation(braiding, v, w, v).pass());
        CHECK(check_braid_defect(braiding, v, w, v).pass());
        CHECK(check_ribbon_compatibility(s.context, braiding, v).pass());
        const ModuleMap& iota = s.catalog.map("iota");
        CHECK(check_naturality(braiding, iota, s.catalog.module("line"), v, w).pass());
    }

    TEST_CASE("sqed tangent complex differential") {
        const Setup s("sqed1");
        const DGLieStructure lie = build_tangent_lie_M(s.dd);
        const auto& G = lie.carrier.generators;
        const auto& A = lie.carrier.algebra->generators();
        const Monomial v{A.index("v1")}, v_star{A.index("v1*")};
        const int x = G.index("x"), pp = G.index("psi+1"), pm = G.index("psi-1"), t = G.index("t_x");

        ModuleVector dx(G.size()), dpm(G.size()), dpp(G.size());
        dx[pp] = single(v_star, 1);
        dx[pm] = single(v, -1);
        dpm[t] = single(v_star, 1);
        dpp[t] = single(v, 1);
        CHECK(lie.carrier.differential[x] == dx);
        CHECK(lie.carrier.differential[pm] == dpm);
        CHECK(lie.carrier.differential[pp] == dpp);
        CHECK(is_zero(lie.carrier.differential[t]));
        CHECK(check_dg_lie(lie).pass());
        CHECK(check_tangent_equals_F_adjoint(s.context, lie).pass());
    }

    TEST_CASE("sl2 quotient tangent complex") {
        const auto in = fixtures::sl2();
        const DGLieStructure lie = build_tangent_quotient(in.g, in.rho);
        const auto& G = lie.carrier.generators;
        const auto& A = lie.carrier.algebra->generators();
        ModuleVector dh(G.size());
        dh[G.index("psi+1")] = single({A.index("v1*")}, 1);
        dh[G.index("psi+2")] = single({A.index("v2*")}, -1);
        CHECK(lie.carrier.differential[G.index("h")] == dh);
        CHECK(check_dg_lie(lie).pass());
    }

    TEST_CASE("every fixture: tangent Lie algebra is a dg Lie algebra with compatible form") {
        for (const auto& in : fixtures::all()) {
            CAPTURE(in.name);
            const DoubleData dd = fixtures::double_of(in);
            const DGLieStructure lie = build_tangent_lie_M(dd);
            CHECK(check_dg_lie(lie).pass());
            CHECK(check_tangent_equals_F_adjoint(KoszulContext(dd, 2), lie).pass());
            CHECK(check_dg_lie(build_tangent_quotient(in.g, in.rho)).pass());
        }
    }

    TEST_CASE("trivial group: the quotient tangent complex has zero differential") {
        const auto in = fixtures::gzero();
        const DGLieStructure lie = build_tangent_quotient(in.g, in.rho);
        for (const auto& image : lie.carrier.differential) CHECK(is_zero(image));
    }
}
