#include <doctest.h>

#include "fockforge/invariants.hpp"
#include "oracles.hpp"

using namespace fockforge;

namespace {

FockSpaceParams space(int m, std::vector<int> s, int bound) {
    FockSpaceParams p;
    p.m = m;
    p.ell = static_cast<int>(s.size());
    p.charge = Charge(std::move(s));
    p.degree_bound = bound;
    return p;
}

void require_all_pass(const FockSpaceParams& p, CrystalOrder order = CrystalOrder::ContentThenComponent) {
    const auto results = run_invariant_suite(p, order);
    CHECK(results.size() == 33);
    for (const auto& r : results) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
}

}  // namespace

TEST_CASE("suite passes at degree 0") {
    require_all_pass(space(2, {0}, 0));
    require_all_pass(space(3, {1, -1}, 0));
}

TEST_CASE("suite passes at the default scale") {
    require_all_pass(space(2, {0}, 6));
    require_all_pass(space(2, {0, 0}, 6));
    require_all_pass(space(3, {1, -1}, 6), CrystalOrder::ComponentThenContent);
    require_all_pass(space(2, {1, 0, -1}, 5));
}

TEST_CASE("tableau expansion of p_r s_lambda agrees with the oracle") {
    for (int r = 1; r <= 4; ++r)
        for (int k = 0; k + r <= 6; ++k)
            for (const auto& lambda : partitions_of(k)) {
                SymFunc want(Basis::Schur, k + r);
                for (const auto& [mu, c] : oracle::power_times_schur(r, lambda)) want.add(mu, c);
                CHECK(kostka_power_product(r, lambda) == want);
            }
}
