#include <random>

#include "dbl/graded.hpp"
#include "dbl/linalg.hpp"
#include "dbl/rational.hpp"
#include "dbl/series.hpp"
#include "dbl/sparse_tensor.hpp"
#include "doctest.h"

using namespace dbl;

TEST_SUITE("core_types") {
    TEST_CASE("rationals parse exactly and render as p/q") {
        CHECK(parse_rational("-3/6") == Rational(-1, 2));
        CHECK(parse_rational("7") == Rational(7));
        CHECK(to_string(parse_rational("4/8")) == "1/2");
        CHECK(to_string(Rational(3)) == "3/1");
        CHECK_THROWS(parse_rational("1.5"));
        CHECK_THROWS(parse_rational("1e3"));
        CHECK_THROWS(parse_rational("x"));
    }

    TEST_CASE("truncated series multiply mod hbar^N") {
        TruncatedSeries a = TruncatedSeries::monomial(3, 1);
        TruncatedSeries b = a * a;
        CHECK(b[2] == 1);
        CHECK((b * a).is_zero());
        CHECK(a.valuation() == 1);
    }

    TEST_CASE("exp and inverse are inverse operations") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> coef(-5, 5);
        for (int trial = 0; trial < 20; ++trial) {
            TruncatedSeries s(5);
            for (int k = 1; k < 5; ++k) s.set(k, Rational(coef(rng), 1 + trial % 3));
            const TruncatedSeries e = series_exp(s);
            CHECK(e * series_exp(-s) == TruncatedSeries(5, 1));
            CHECK(e * series_inverse(e) == TruncatedSeries(5, 1));
        }
        CHECK_THROWS_AS(series_exp(TruncatedSeries(3, 1)), std::domain_error);
        CHECK_THROWS_AS(series_inverse(TruncatedSeries(3)), std::domain_error);
    }

    TEST_CASE("koszul sign of swapping two odd factors") {
        CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
        CHECK(koszul_sign({1, 0}, {1, 2}) == 1);
        CHECK(koszul_sign({2, 1, 0}, {1, 1, 1}) == -1);
    }

    TEST_CASE("graded basis rejects duplicate names") {
        GradedBasis b;
        b.add({"a", 0, 0});
        CHECK_THROWS_AS(b.add({"a", 1, 0}), std::invalid_argument);
        CHECK(b.find("missing") == -1);
        CHECK(b.parity(0) == 0);
    }

    TEST_CASE("graded flip squares to the identity") {
        auto basis = std::make_shared<GradedBasis>(GradedBasis({{"a", 0, 0}, {"p", 1, 1}, {"q", 1, 1}}));
        SparseTensor t(basis, 2, 2);
        t.add({1, 2}, Rational(3));
        t.add({0, 1}, Rational(-1));
        const SparseTensor flipped = graded_flip(t);
        CHECK(flipped.at({2, 1})[0] == -3);
        CHECK(flipped.at({1, 0})[0] == -1);
        CHECK(graded_flip(flipped) == t);
    }

    TEST_CASE("fraction-free rank matches a dependent row") {
        std::vector<SparseRow> rows{{{0, Rational(1)}, {1, Rational(1, 2)}},
                                    {{0, Rational(2)}, {1, Rational(1)}},
                                    {{1, Rational(3)}, {2, Rational(-1)}}};
        CHECK(rank_of(rows) == 2);
        RowEchelon e;
        CHECK(e.insert(rows[0]));
        CHECK_FALSE(e.insert(rows[1]));
    }

    TEST_CASE("random integer matrices: rank equals rank of the transpose") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (int trial = 0; trial < 30; ++trial) {
            const int m = 2 + trial % 4;
            const int n = 3 + trial % 3;
            std::vector<std::vector<int>> a(m, std::vector<int>(n));
            for (auto& row : a) {
                for (auto& v : row) v = coef(rng) * (coef(rng) != 0);
            }
            std::vector<SparseRow> rows(m);
            std::vector<SparseRow> cols(n);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (a[i][j] != 0) {
                        rows[i].emplace_back(j, Rational(a[i][j]));
                        cols[j].emplace_back(i, Rational(a[i][j]));
                    }
                }
            }
            CHECK(rank_of(rows) == rank_of(cols));
        }
    }
}
