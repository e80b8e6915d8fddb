#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dbl/dga.hpp"
#include "dbl/hopf.hpp"
#include "dbl/koszul.hpp"
#include "dbl/lie.hpp"
#include "dbl/runner.hpp"
#include "dbl/spec_file.hpp"
#include "dbl/tangent.hpp"
#include "dbl/uea.hpp"

using namespace dbl;

namespace {

const std::vector<std::string> kFixtures{"trivial", "gzero", "sqed1", "sqed3", "sl2"};

AlgebraSpec fixture(const std::string& name) {
    return load_spec(std::string(DOUBLECHECK_TEST_SPECS) + "/" + name + ".json");
}

class Outcome {
  public:
    void require(bool ok, const std::string& what) {
        if (!ok && failure_.empty()) failure_ = what;
    }
    void require(const Report& report, const std::string& what) {
        if (const CheckResult* f = report.first_failure()) require(false, what + ": " + f->name + " " + f->detail);
    }
    bool pass() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }

  private:
    std::string failure_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Returns the criterion's verdict; a time limit of 0 means none.
bool criterion(int number, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (limit > 0) outcome.require(elapsed <= limit, "took " + std::to_string(elapsed) + " s");
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", number, outcome.pass() ? "PASS" : "FAIL", title.c_str(), elapsed,
                outcome.pass() ? "" : "  ", outcome.failure().c_str());
    std::fflush(stdout);
    return outcome.pass();
}

// Multiplication by v v* on C[v, v*] from degree w - 2 to degree w, as a 0/1 matrix
// on monomials v^a v*^(deg - a); its rank by elimination over the integers.
int multiplication_rank(int w) {
    if (w < 2) return 0;
    const int rows = w + 1, cols = w - 1;
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
    for (int a = 0; a < cols; ++a) m[a + 1][a] = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][c] != 0) pivot = r;
        }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const long f = m[r][c], p = m[rank][c];
            for (int k = 0; k < cols; ++k) m[r][k] = m[r][k] * p - m[rank][k] * f;
        }
        ++rank;
    }
    return rank;
}

void add_term(ModuleVector& target, int generator, const Monomial& monomial, const Rational& value) {
    if (sgn(value) == 0) return;
    Polynomial& p = target[generator];
    p[monomial] += value;
    if (sgn(p[monomial]) == 0) p.erase(monomial);
}

// The displayed differential of the tangent Lie algebra, written out from the
// structure constants and representation matrices alone.
std::vector<ModuleVector> displayed_tangent_differential(const AlgebraSpec& spec) {
    const int r = spec.g.dim(), n = spec.rho.dimension;
    const int dim = r + 2 * n + r;
    const auto& M = spec.rho.matrices;
    const auto psi_plus = [r](int j) { return r + j; };
    const auto psi_minus = [r, n](int j) { return r + n + j; };
    const auto t = [r, n](int a) { return r + 2 * n + a; };
    const auto v = [](int i) { return Monomial{i}; };
    const auto v_star = [n](int i) { return Monomial{n + i}; };
    const auto c = [n](int a) { return Monomial{2 * n + a}; };
    std::vector<ModuleVector> d(dim, ModuleVector(dim));
    for (int b = 0; b < r; ++b) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                add_term(d[b], psi_plus(j), v_star(i), M[b][j][i]);
                add_term(d[b], psi_minus(j), v(i), -M[b][i][j]);
            }
        }
        for (int cc = 0; cc < r; ++cc) {
            for (int a = 0; a < r; ++a) add_term(d[b], t(cc), c(a), spec.g.structure_constant(b, cc, a));
        }
    }
    for (int a = 0; a < r; ++a) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                add_term(d[psi_minus(i)], t(a), v_star(j), M[a][i][j]);
                add_term(d[psi_plus(i)], t(a), v(j), M[a][j][i]);
            }
        }
    }
    return d;
}

const char* two_dimensional_module(const std::string& fixture_name) {
    if (fixture_name == "trivial") return "pair";
    if (fixture_name == "sl2") return "fund";
    return "V2";
}

}  // namespace

int main() {
    bool all = true;

    all &= criterion(1, "structure: Jacobi, invariant form, CYBE", 5, [](Outcome& out) {
        for (const auto& name : kFixtures) {
            const AlgebraSpec spec = fixture(name);
            const DoubleData dd = build_double(spec.g, spec.rho);
            out.require(check_jacobi(dd.algebra), name);
            out.require(check_invariant_form(dd.algebra, dd.kappa), name);
            const SparseTensor residual = cybe_residual(classical_r(dd), dd.algebra);
            out.require(residual.is_zero(), name + ": CYBE residual " + residual.to_string());
        }
    });

    all &= criterion(2, "omega identity", 0, [](Outcome& out) {
        for (const auto& name : kFixtures) {
            const AlgebraSpec spec = fixture(name);
            const DoubleData dd = build_double(spec.g, spec.rho);
            const Uea uea(dd.algebra, 1);
            const UEAElement residual = omega(uea, classical_r(dd)) - omega_from_casimir(uea, casimir(uea, dd));
            out.require(residual.is_zero(), name + ": " + residual.to_string(uea.basis()));
        }
    });

    all &= criterion(3, "double at N=4, W=6: coproduct, cross relations, QYBE, hexagons", 60, [](Outcome& out) {
        for (const auto& name : kFixtures) out.require(run_suite(fixture(name), "hopf", 4, 6), name);
    });

    all &= criterion(4, "ribbon element", 0, [](Outcome& out) {
        for (const auto& name : kFixtures) out.require(run_suite(fixture(name), "ribbon", 4, 6), name);
    });

    all &= criterion(5, "moment DGA equals CE; sqed cohomology", 0, [](Outcome& out) {
        for (const auto& name : kFixtures) {
            const AlgebraSpec spec = fixture(name);
            const DoubleData dd = build_double(spec.g, spec.rho);
            out.require(check_moment_equals_ce(dd), name);
            out.require(check_dga(build_moment_dga(spec.g, spec.rho)), name);
        }
        const AlgebraSpec sqed = fixture("sqed1");
        const CohomologyReport rep = cohomology(build_moment_dga(sqed.g, sqed.rho), {0, 6}, {-1, 0});
        const auto dim = [&](int degree, int weight) {
            const auto it = rep.dimensions.find({degree, weight});
            return it == rep.dimensions.end() ? 0 : it->second;
        };
        const int expected_h0[] = {1, 2, 2, 2};
        for (int w = 0; w <= 3; ++w) {
            out.require(dim(0, w) == expected_h0[w], "H0 at weight " + std::to_string(w) + " is " + std::to_string(dim(0, w)));
        }
        for (int w = 0; w <= 6; ++w) {
            // H^-1 is the kernel of multiplication by v v* on c C[v, v*]_{w-2}.
            const int oracle = std::max(w - 1, 0) - multiplication_rank(w);
            out.require(oracle == 0 && dim(-1, w) == oracle,
                        "H-1 at weight " + std::to_string(w) + " is " + std::to_string(dim(-1, w)));
        }
    });

    all &= criterion(6, "tangent Lie algebra", 0, [](Outcome& out) {
        for (const auto& name : kFixtures) {
            const AlgebraSpec spec = fixture(name);
            const DoubleData dd = build_double(spec.g, spec.rho);
            const DGLieStructure lie = build_tangent_lie_M(dd);
            out.require(lie.carrier.differential == displayed_tangent_differential(spec), name + ": displayed differential");
            out.require(check_dg_lie(lie), name);
            out.require(check_tangent_equals_F_adjoint(KoszulContext(dd, spec.truncation_order), lie), name);
        }
    });

    all &= criterion(7, "Koszul roundtrip on |weight| <= 4", 120, [](Outcome& out) {
        for (const auto& name : kFixtures) {
            const AlgebraSpec spec = fixture(name);
            const DoubleData dd = build_double(spec.g, spec.rho);
            const int order = spec.truncation_order;
            const KoszulContext context(dd, order);
            const ModuleCatalog catalog = build_catalog(spec, dd, order);
            for (const char* module : {"trivial", "adjoint", two_dimensional_module(name)}) {
                const FiniteModule& m = catalog.module(module);
                const int cap = minimal_weight_cap(functor_F(context, m), -kRoundtripWindow);
                out.require(check_roundtrip(context, m, kRoundtripWindow, cap), name + "/" + module);
            }
        }
    });

    all &= criterion(8, "monoidality, braiding and the braid relation for sqed", 0, [](Outcome& out) {
        const AlgebraSpec spec = fixture("sqed1");
        const DoubleData dd = build_double(spec.g, spec.rho);
        const int order = 4;
        const KoszulContext context(dd, order);
        const ModuleCatalog catalog = build_catalog(spec, dd, order);
        const BraidingData braiding(dd, order);
        std::vector<const FiniteModule*> set;
        for (const auto& name : spec.braiding_modules) set.push_back(&catalog.module(name));
        out.require(!set.empty(), "no braiding modules declared");
        for (const auto* a : set) {
            for (const auto* b : set) {
                out.require(check_monoidality(context, *a, *b), a->name() + "," + b->name());
                out.require(check_braiding_pair(context, braiding, *a, *b), a->name() + "," + b->name());
                for (const auto* c : set) {
                    out.require(check_braid_relation(braiding, *a, *b, *c), a->name() + "," + b->name() + "," + c->name());
                }
            }
        }
    });

    all &= criterion(9, "corrupted fixtures fail exactly their suite", 0, [](Outcome& out) {
        for (const char* name : {"sqed1-flipf", "sqed1-corrupt", "sqed1-flipdelta"}) {
            const AlgebraSpec spec = fixture(name);
            std::set<std::string> intended;
            for (const auto& f : spec.faults) intended.insert(f.suite);
            out.require(intended.size() == 1, std::string(name) + ": expected one faulted suite");
            std::set<std::string> failed;
            for (const auto& s : run_verify(spec, {}).suites) {
                if (!s.pass()) failed.insert(s.suite);
            }
            std::string list;
            for (const auto& s : failed) list += " " + s;
            out.require(failed == intended, std::string(name) + ": failed" + list);
        }
    });

    all &= criterion(10, "verify output is byte-identical across runs", 0, [](Outcome& out) {
        const AlgebraSpec spec = fixture("sqed1");
        RunOptions options;
        const std::string first = serialize(run_verify(spec, options), false);
        const std::string second = serialize(run_verify(spec, options), false);
        options.jobs = 2;
        const std::string parallel = serialize(run_verify(spec, options), false);
        out.require(first == second, "two sequential runs differ");
        out.require(first == parallel, "sequential and parallel runs differ");
    });

    return all ? 0 : 1;
}
