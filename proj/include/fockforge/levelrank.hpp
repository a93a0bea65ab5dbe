#pragma once

// Level-rank combinatorics for affine sl_ell: translations xi_beta, the weights
// gamma and gamma-hat attached to charges, the sets A(ell, m)_d with the dagger
// bijection, the core/charge dictionary and the level-one side of the
// trivial-charge dimension identity.
//
// Finite root lattice elements are AffineWeights of level 0 with no delta part;
// beta = sum_p b_p (omega_p - omega_0) lies in the root lattice iff
// sum_p p b_p = 0 mod ell.

#include <vector>

#include "fockforge/affine_weight.hpp"
#include "fockforge/errors.hpp"
#include "fockforge/partitions.hpp"

namespace fockforge {

// sum_{p >= 1} b[p-1] (omega_p - omega_0) in rank ell.
AffineWeight finite_weight(const std::vector<int>& b, int ell);
bool in_root_lattice(const AffineWeight& beta);

// mu + mu(1) beta - (<mu, beta> + 1/2 <beta, beta> mu(1)) delta.
// Throws std::invalid_argument unless beta is in the finite root lattice.
AffineWeight xi_action(const AffineWeight& beta, const AffineWeight& mu);

// sum_{p=1}^{ell-1} (s_{p+1} - s_p)(omega_p - omega_0), entries of s numbered from 1.
// Throws std::invalid_argument unless s has weight 0.
AffineWeight gamma_of_charge(const Charge& s);

// (m - l_1 + l_ell) omega_0 + sum_{p=1}^{ell-1} (l_p - l_{p+1}) omega_p.
AffineWeight gamma_hat(const std::vector<int>& lambda, int m);

// m omega_0 + sum_{p >= 1} mu_p (omega_p - omega_0); the delta part is dropped.
AffineWeight level_lift(const AffineWeight& mu, int m);

// A weakly decreasing ell-tuple with first minus last at most m.
struct BoundedWeightTuple {
    std::vector<int> entries;
    int m = 0;

    int ell() const { return static_cast<int>(entries.size()); }
    int d() const;
    // Throws std::invalid_argument when the tuple is not in A(ell, m).
    void validate() const;
    bool operator==(const BoundedWeightTuple&) const = default;
};

// A(ell, m)_d restricted to entries in [-window, window], in lexicographic order.
std::vector<BoundedWeightTuple> bounded_tuples(int ell, int m, int d, int window);

// The unique mu in A(m, ell)_d with gamma_hat(lambda, m) = sum_p omega_{mu_p mod ell},
// searched among entries in [-m-ell, m+ell]. Throws InvariantFailure on zero
// or several candidates.
BoundedWeightTuple dagger(const BoundedWeightTuple& lambda);

// Runner bead counts of the ell-runner abacus, shifted to weight 0.
// Throws std::invalid_argument when core is not an ell-core.
Charge tau_core_to_charge(const Partition& core, int ell);
// Throws std::invalid_argument unless s has weight 0.
Partition charge_to_core(const Charge& s);

// Number of nodes with content = 0 mod ell.
int zero_nodes(const Partition& lambda, int ell);

// Coefficients (constant term first) of prod over nodes of (X + content), mod ell.
std::vector<int> content_polynomial_mod(const Partition& lambda, int ell);
// c_core(X) prod_{p<ell} (X + p)^k, mod ell.
std::vector<int> core_times_ribbons_mod(const Partition& core, int k, int ell);

// Partitions of n ell with empty ell-core.
std::vector<Partition> empty_core_partitions(int n, int ell);
// Dimension of the j-eigenspace of the m-th Casimir of the level-one Fock space
// of affine sl_ell, restricted to the partitions of n ell with empty ell-core.
int rhs_case1_dim(int n, int j, int m, int ell);

// Dominant weights m omega_0 + beta, beta in the root lattice, in rank ell.
std::vector<AffineWeight> dominant_lifts(int ell, int m);
// gamma_hat(lambda, m) over lambda in A(ell, m)_0.
std::vector<AffineWeight> gamma_hat_image(int ell, int m);

// omega_0 + beta - 1/2 <beta, beta> delta - i delta.
AffineWeight weight_of_basic(const AffineWeight& beta, int i);
// <mu, mu> = 0.
bool is_extremal(const AffineWeight& mu);

}  // namespace fockforge
