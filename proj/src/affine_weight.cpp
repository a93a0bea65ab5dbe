#include "fockforge/affine_weight.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fockforge/partitions.hpp"

namespace fockforge {

AffineWeight AffineWeight::fundamental(int p, int rank) {
    AffineWeight w(rank);
    w.omega.at(static_cast<std::size_t>(mod(p, rank))) = 1;
    return w;
}

AffineWeight AffineWeight::null_root(int rank) {
    AffineWeight w(rank);
    w.delta = 1;
    return w;
}

AffineWeight AffineWeight::simple_root(int q, int rank) {
    AffineWeight w(rank);
    q = mod(q, rank);
    if (rank == 1) {
        w.delta = 1;
        return w;
    }
    w.omega[q] += 2;
    w.omega[mod(q - 1, rank)] -= 1;
    w.omega[mod(q + 1, rank)] -= 1;
    if (q == 0) w.delta = 1;
    return w;
}

int AffineWeight::level() const { return std::accumulate(omega.begin(), omega.end(), 0); }

AffineWeight& AffineWeight::operator+=(const AffineWeight& other) {
    if (rank() != other.rank()) throw std::invalid_argument("affine weights of different rank");
    for (int p = 0; p < rank(); ++p) omega[p] += other.omega[p];
    delta += other.delta;
    return *this;
}

AffineWeight& AffineWeight::operator-=(const AffineWeight& other) {
    if (rank() != other.rank()) throw std::invalid_argument("affine weights of different rank");
    for (int p = 0; p < rank(); ++p) omega[p] -= other.omega[p];
    delta -= other.delta;
    return *this;
}

AffineWeight& AffineWeight::operator*=(int c) {
    for (int& x : omega) x *= c;
    delta *= c;
    return *this;
}

Rational weight_pairing(const AffineWeight& mu, const AffineWeight& nu) {
    if (mu.rank() != nu.rank()) throw std::invalid_argument("affine weights of different rank");
    const int k = mu.rank();
    Rational total = 0;
    for (int p = 1; p < k; ++p) {
        if (mu.omega[p] == 0) continue;
        for (int q = 1; q < k; ++q) {
            if (nu.omega[q] == 0) continue;
            total += Rational(mu.omega[p] * nu.omega[q]) * (Rational(std::min(p, q)) - ratio(p * q, k));
        }
    }
    total += mu.level() * nu.delta + nu.level() * mu.delta;
    return total;
}

std::string to_string(const AffineWeight& mu) {
    std::string out;
    for (int p = 0; p < mu.rank(); ++p) {
        if (mu.omega[p] == 0) continue;
        if (!out.empty()) out += mu.omega[p] > 0 ? " + " : " - ";
        else if (mu.omega[p] < 0) out += "-";
        const int a = std::abs(mu.omega[p]);
        if (a != 1) out += std::to_string(a);
        out += "w" + std::to_string(p);
    }
    if (mu.delta != 0) {
        if (!out.empty()) out += mu.delta > 0 ? " + " : " - ";
        else if (mu.delta < 0) out += "-";
        const Rational a = abs(mu.delta);
        if (a != 1) out += to_string(a);
        out += "d";
    }
    return out.empty() ? "0" : out;
}

nlohmann::json to_json(const AffineWeight& mu) { return {{"omega", mu.omega}, {"delta", to_string(mu.delta)}}; }

}  // namespace fockforge
