#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dbl/lie.hpp"
#include "dbl/spec_file.hpp"

namespace fixtures {

struct Input {
    std::string name;
    dbl::LieAlgebraData g;
    dbl::RepresentationData rho;
};

inline Input sqed1() { return {"sqed1", dbl::make_lie_algebra({"x"}, {}), {1, {{{dbl::Rational(1)}}}}}; }

inline Input sqed3() {
    return {"sqed3", dbl::make_lie_algebra({"x"}, {}), {3, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}};
}

inline Input sl2() {
    return {"sl2",
            dbl::make_lie_algebra({"e", "h", "f"}, {{"h", "e", "e", 2}, {"h", "f", "f", -2}, {"e", "f", "h", 1}}),
            {2, {{{0, 1}, {0, 0}}, {{1, 0}, {0, -1}}, {{0, 0}, {1, 0}}}}};
}

inline Input gzero() { return {"gzero", dbl::make_lie_algebra({}, {}), {1, {}}}; }
inline Input trivial() { return {"trivial", dbl::make_lie_algebra({}, {}), {0, {}}}; }

inline std::vector<Input> all() { return {trivial(), gzero(), sqed1(), sqed3(), sl2()}; }

inline dbl::DoubleData double_of(const Input& in) { return dbl::build_double(in.g, in.rho); }

inline dbl::AlgebraSpec spec(const std::string& name) {
    return dbl::load_spec(std::string(DOUBLECHECK_TEST_SPECS) + "/" + name + ".json");
}

}  // namespace fixtures
