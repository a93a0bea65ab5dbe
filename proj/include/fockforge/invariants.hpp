#pragma once

// The invariant suite behind `fockforge check`: every module's structural
// identities, evaluated exactly on all degrees up to the configured bound.

#include <string>
#include <vector>

#include "fockforge/crystal.hpp"
#include "fockforge/fock.hpp"
#include "fockforge/symfunc.hpp"

namespace fockforge {

struct CheckResult {
    std::string name;  // "module/identity"
    bool passed = false;
    std::string detail;  // first counterexample, or a short count of what was checked
};

// Runs the suite on the space described by params. The crystal checks use
// the given node order, so a corrupted order can be fed in deliberately.
// Every check runs even after a failure.
std::vector<CheckResult> run_invariant_suite(const FockSpaceParams& params, const NodeOrder& order);
std::vector<CheckResult> run_invariant_suite(const FockSpaceParams& params,
                                             CrystalOrder order = CrystalOrder::ContentThenComponent);

// Schur expansion of p_r s_lambda through monomial coefficients and Kostka
// numbers, with no border strips involved.
SymFunc kostka_power_product(int r, const Partition& lambda);

}  // namespace fockforge
