#pragma once

// Weights of the extended affine algebra of sl_k, written in the basis
// (omega_0, ..., omega_{k-1}, delta), with the invariant form
//   <omega_p, omega_q> = min(p, q) - pq/k,  <omega_p, delta> = 1,  <delta, delta> = 0.

#include <string>
#include <vector>

#include <json.hpp>

#include "fockforge/rational.hpp"

namespace fockforge {

struct AffineWeight {
    std::vector<int> omega;  // coefficients of omega_0 .. omega_{k-1}
    Rational delta = 0;

    AffineWeight() = default;
    explicit AffineWeight(int rank) : omega(static_cast<std::size_t>(rank), 0) {}
    AffineWeight(std::vector<int> coeffs, Rational d) : omega(std::move(coeffs)), delta(std::move(d)) {}

    static AffineWeight fundamental(int p, int rank);
    static AffineWeight null_root(int rank);
    // alpha_q = 2 omega_q - omega_{q-1} - omega_{q+1} (+ delta when q = 0); alpha_0 = delta for rank 1.
    static AffineWeight simple_root(int q, int rank);

    int rank() const { return static_cast<int>(omega.size()); }
    // mu(1): the sum of the omega coefficients.
    int level() const;

    AffineWeight& operator+=(const AffineWeight& other);
    AffineWeight& operator-=(const AffineWeight& other);
    AffineWeight& operator*=(int c);
    friend AffineWeight operator+(AffineWeight a, const AffineWeight& b) { return a += b; }
    friend AffineWeight operator-(AffineWeight a, const AffineWeight& b) { return a -= b; }
    friend AffineWeight operator*(int c, AffineWeight a) { return a *= c; }
    friend AffineWeight operator-(AffineWeight a) { return a *= -1; }
    bool operator==(const AffineWeight& other) const = default;
};

// Throws std::invalid_argument on rank mismatch.
Rational weight_pairing(const AffineWeight& mu, const AffineWeight& nu);

std::string to_string(const AffineWeight& mu);
nlohmann::json to_json(const AffineWeight& mu);

}  // namespace fockforge
