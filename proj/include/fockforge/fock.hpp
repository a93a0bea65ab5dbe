#pragma once

// The charged level-ell Fock space of affine sl_m on the multipartition basis
// |lambda, s>, with the Chevalley generators e_q, f_q, the Heisenberg operators
// b_r, b'_r and the Casimir operators.
//
// The Heisenberg action is realized through Lambda_Gamma: |lambda, s> corresponds
// to S_{tau lambda}, and b_r is multiplication by sum_p P_{mr,p}.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fockforge/affine_weight.hpp"
#include "fockforge/linalg.hpp"
#include "fockforge/partitions.hpp"

namespace fockforge {

struct FockSpaceParams {
    int m = 2;
    int ell = 1;
    Charge charge{std::vector<int>{0}};
    int degree_bound = 0;

    // Throws std::invalid_argument unless m >= 2, ell >= 1, N >= 0 and |charge| = ell.
    void validate() const;
    bool operator==(const FockSpaceParams&) const = default;
};

class FockVector {
public:
    explicit FockVector(FockSpaceParams params);
    static FockVector basis(const FockSpaceParams& params, const Multipartition& lambda);

    const FockSpaceParams& params() const { return params_; }
    const std::map<Multipartition, Rational>& coeffs() const& { return coeffs_; }
    // Safe in range-for over a temporary.
    std::map<Multipartition, Rational> coeffs() && { return std::move(coeffs_); }
    Rational coeff(const Multipartition& lambda) const;
    bool is_zero() const { return coeffs_.empty(); }

    // Throws std::domain_error above the degree bound.
    void add(const Multipartition& lambda, const Rational& c);

    FockVector& operator+=(const FockVector& other);
    FockVector& operator-=(const FockVector& other);
    FockVector& operator*=(const Rational& c);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Rational& c, FockVector a) { return a *= c; }
    bool operator==(const FockVector& other) const = default;

private:
    void require_same_space(const FockVector& other) const;

    FockSpaceParams params_;
    std::map<Multipartition, Rational> coeffs_;
};

// Removes (e) or adds (f) one node of residue q. f drops terms above the bound.
FockVector apply_e(int q, const FockVector& v);
FockVector apply_f(int q, const FockVector& v);
// Multiplication by sum_p P_{mr,p} through |lambda, s> <-> S_{tau lambda}.
FockVector apply_b(int r, const FockVector& v);
// Adjoint of apply_b for the orthonormal basis.
FockVector apply_b_dual(int r, const FockVector& v);
// (1/(m ell)) sum_r b_r b'_r.
FockVector apply_casimir(const FockVector& v);
// Throws std::invalid_argument when the parameters differ.
Rational fock_pairing(const FockVector& u, const FockVector& v);

// -Delta(s,m) delta + sum_p omega_{s_p} - sum_q n_q alpha_q, of rank m.
AffineWeight weight_of(const Multipartition& lambda, const FockSpaceParams& params);
Rational delta_shift(const Charge& s, int m);

// Matrix of b_r from degree n to degree n + mr, columns indexed by the degree-n basis.
Matrix b_matrix(int r, int n, const FockSpaceParams& params);
// Matrix of the Casimir operator on the ordered basis multipartitions_of(n, ell).
Matrix casimir_matrix(int n, const FockSpaceParams& params);
// Matrix of (1/(m ell)) sum_r b_{mr} b'_{mr} on partitions_of(n) in the level-one
// Fock space of affine sl_ell, where b_k is multiplication by p_{ell k}.
Matrix casimir_m_matrix_level1(int n, int m, int ell);

std::string to_string(const FockVector& v);
// Inverse of to_string: "[2] - 1/2 [1,1]", "-[1]|[]", "0". Throws
// std::invalid_argument on malformed text and std::domain_error above the bound.
FockVector parse_fock_vector(std::string_view text, const FockSpaceParams& params);
nlohmann::json to_json(const FockVector& v);

}  // namespace fockforge
