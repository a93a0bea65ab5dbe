#pragma once

// The ring of symmetric functions over Q, truncated at a degree bound, with the
// Schur and power-sum bases, and its wreath extension Lambda_Gamma = Lambda^{(x) ell}
// expanded in the orthonormal basis S_lambda = prod_p s_{lambda(p)}(x_{., p}).

#include <map>
#include <string>

#include <json.hpp>

#include "fockforge/partitions.hpp"
#include "fockforge/rational.hpp"

namespace fockforge {

enum class Basis { Schur, Power };

class SymFunc {
public:
    SymFunc(Basis basis, int degree_bound);

    static SymFunc one(int degree_bound, Basis basis = Basis::Schur);
    static SymFunc schur(const Partition& lambda, int degree_bound);
    static SymFunc power(const Partition& lambda, int degree_bound);

    Basis basis() const { return basis_; }
    int degree_bound() const { return bound_; }
    const std::map<Partition, Rational>& coeffs() const& { return coeffs_; }
    // Safe in range-for over a temporary.
    std::map<Partition, Rational> coeffs() && { return std::move(coeffs_); }
    Rational coeff(const Partition& lambda) const;
    bool is_zero() const { return coeffs_.empty(); }
    // Largest size in the support, -1 for zero.
    int degree() const;

    // Throws std::domain_error when |lambda| exceeds the degree bound.
    void add(const Partition& lambda, const Rational& c);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
    bool operator==(const SymFunc& other) const = default;

private:
    void require_compatible(const SymFunc& other) const;

    Basis basis_;
    int bound_;
    std::map<Partition, Rational> coeffs_;
};

class WreathFunc {
public:
    WreathFunc(int ell, int degree_bound);

    static WreathFunc one(int ell, int degree_bound);
    static WreathFunc schur(const Multipartition& lambda, int degree_bound);
    // P_lambda = prod_p prod_i P_{lambda(p)_i, p}, expanded in the S basis.
    static WreathFunc power(const Multipartition& lambda, int degree_bound);

    int ell() const { return ell_; }
    int degree_bound() const { return bound_; }
    const std::map<Multipartition, Rational>& coeffs() const& { return coeffs_; }
    // Safe in range-for over a temporary.
    std::map<Multipartition, Rational> coeffs() && { return std::move(coeffs_); }
    Rational coeff(const Multipartition& lambda) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Multipartition& lambda, const Rational& c);

    WreathFunc& operator+=(const WreathFunc& other);
    WreathFunc& operator-=(const WreathFunc& other);
    WreathFunc& operator*=(const Rational& c);
    friend WreathFunc operator+(WreathFunc a, const WreathFunc& b) { return a += b; }
    friend WreathFunc operator-(WreathFunc a, const WreathFunc& b) { return a -= b; }
    friend WreathFunc operator*(const Rational& c, WreathFunc a) { return a *= c; }
    bool operator==(const WreathFunc& other) const = default;

private:
    void require_compatible(const WreathFunc& other) const;

    int ell_;
    int bound_;
    std::map<Multipartition, Rational> coeffs_;
};

// One Murnaghan-Nakayama step: every mu obtained from lambda by adding a border
// strip of size r, with sign (-1)^{height}.
std::vector<std::pair<Partition, int>> add_border_strips(const Partition& lambda, int r);
// The transpose rule: every mu obtained by removing a border strip of size r.
std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int r);

// p_r * f in the Schur basis. Terms above the degree bound are dropped.
SymFunc mult_by_power_sum(int r, const SymFunc& f);
// Character table entry chi^lambda(rho), computed by iterated border-strip additions.
Integer character(const Partition& lambda, const Partition& rho);
SymFunc power_to_schur(const Partition& rho, int degree_bound);
SymFunc schur_to_power(const Partition& lambda, int degree_bound);
SymFunc to_schur(const SymFunc& f);
SymFunc to_power(const SymFunc& f);
// Product in Lambda; the result is in the basis of f. Terms above the bound are dropped.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
// Hall inner product. Throws std::invalid_argument on mismatched bounds.
Rational hall_pairing(const SymFunc& f, const SymFunc& g);
// psi^m: p_r -> p_{mr}. Throws std::domain_error when m * deg(f) exceeds the bound.
SymFunc plethysm_psi_m(int m, const SymFunc& f);

Rational wreath_pairing(const WreathFunc& f, const WreathFunc& g);
// Multiplication by P_{r,p}: the border-strip rule on component p only.
WreathFunc wreath_mult_by_P(int r, int p, const WreathFunc& f);
// S_lambda -> prod_p s_{lambda(p)}; P_{r,p} -> p_r.
SymFunc restrict_to_sym(const WreathFunc& f);
// p_r -> sum_p P_{r,p}.
WreathFunc induce_from_sym(const SymFunc& f, int ell);
// (tau lambda)(p) = lambda(p + 1).
Multipartition rotate_tau(const Multipartition& lambda);

// {"[2]": "1", "[1,1]": "-1"}
nlohmann::json to_json(const SymFunc& f);
nlohmann::json to_json(const WreathFunc& f);

}  // namespace fockforge
