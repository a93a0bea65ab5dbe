#include "fockforge/levelrank.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fockforge/fock.hpp"

namespace fockforge {

AffineWeight finite_weight(const std::vector<int>& b, int ell) {
    if (static_cast<int>(b.size()) != ell - 1) throw std::invalid_argument("expected ell - 1 coordinates");
    AffineWeight w(ell);
    for (int p = 1; p < ell; ++p) {
        w.omega[p] += b[p - 1];
        w.omega[0] -= b[p - 1];
    }
    return w;
}

bool in_root_lattice(const AffineWeight& beta) {
    if (beta.level() != 0 || beta.delta != 0) return false;
    long long sum = 0;
    for (int p = 1; p < beta.rank(); ++p) sum += static_cast<long long>(p) * beta.omega[p];
    return mod(sum, beta.rank()) == 0;
}

AffineWeight xi_action(const AffineWeight& beta, const AffineWeight& mu) {
    if (!in_root_lattice(beta)) throw std::invalid_argument("xi_beta needs beta in the finite root lattice");
    const int level = mu.level();
    AffineWeight out = mu + level * beta;
    out.delta -= weight_pairing(mu, beta) + Rational(level) * weight_pairing(beta, beta) / 2;
    return out;
}

AffineWeight gamma_of_charge(const Charge& s) {
    if (s.weight() != 0) throw std::invalid_argument("charge " + to_string(s) + " does not have weight 0");
    const int ell = s.ell();
    std::vector<int> b;
    for (int p = 1; p < ell; ++p) b.push_back(s[p] - s[p - 1]);
    return finite_weight(b, ell);
}

AffineWeight gamma_hat(const std::vector<int>& lambda, int m) {
    const int ell = static_cast<int>(lambda.size());
    if (ell < 1) throw std::invalid_argument("gamma_hat needs at least one entry");
    AffineWeight w(ell);
    w.omega[0] = m - lambda.front() + lambda.back();
    for (int p = 1; p < ell; ++p) w.omega[p] = lambda[p - 1] - lambda[p];
    return w;
}

AffineWeight level_lift(const AffineWeight& mu, int m) {
    AffineWeight w(mu.rank());
    w.omega[0] = m;
    for (int p = 1; p < mu.rank(); ++p) {
        w.omega[p] = mu.omega[p];
        w.omega[0] -= mu.omega[p];
    }
    return w;
}

int BoundedWeightTuple::d() const { return std::accumulate(entries.begin(), entries.end(), 0); }

void BoundedWeightTuple::validate() const {
    if (entries.empty()) throw std::invalid_argument("empty weight tuple");
    for (std::size_t p = 1; p < entries.size(); ++p)
        if (entries[p] > entries[p - 1]) throw std::invalid_argument("weight tuple must be weakly decreasing");
    if (entries.front() - entries.back() > m) throw std::invalid_argument("weight tuple spread exceeds m");
}

std::vector<BoundedWeightTuple> bounded_tuples(int ell, int m, int d, int window) {
    std::vector<BoundedWeightTuple> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int hi, int sum) {
        const int k = static_cast<int>(cur.size());
        if (k == ell) {
            if (sum == d) out.push_back({cur, m});
            return;
        }
        const int lo = k == 0 ? -window : std::max(-window, cur.front() - m);
        for (int x = lo; x <= hi; ++x) {
            cur.push_back(x);
            rec(x, sum + x);
            cur.pop_back();
        }
    };
    rec(window, 0);
    return out;
}

BoundedWeightTuple dagger(const BoundedWeightTuple& lambda) {
    lambda.validate();
    const int ell = lambda.ell(), m = lambda.m;
    const AffineWeight target = gamma_hat(lambda.entries, m);
    std::vector<BoundedWeightTuple> found;
    for (auto& mu : bounded_tuples(m, ell, lambda.d(), m + ell)) {
        AffineWeight w(ell);
        for (int x : mu.entries) w.omega[mod(x, ell)] += 1;
        if (w == target) found.push_back(std::move(mu));
    }
    if (found.size() != 1)
        throw InvariantFailure("dagger of (" + std::to_string(ell) + "," + std::to_string(m) + ") tuple has " +
                               std::to_string(found.size()) + " candidates");
    return found.front();
}

Charge tau_core_to_charge(const Partition& core, int ell) {
    if (!is_core(core, ell)) throw std::invalid_argument(to_string(core) + " is not a " + std::to_string(ell) + "-core");
    const int beads = ell * ((core.length() + ell - 1) / ell);
    std::vector<int> s(static_cast<std::size_t>(ell), -beads / ell);
    for (int k = 1; k <= beads; ++k) ++s[mod(core.row(k) - k + beads, ell)];
    return Charge(s);
}

Partition charge_to_core(const Charge& s) {
    if (s.weight() != 0) throw std::invalid_argument("charge " + to_string(s) + " does not have weight 0");
    const int ell = s.ell();
    int shift = 0;
    for (int x : s.entries()) shift = std::max(shift, -x);
    std::vector<int> beta;
    for (int p = 0; p < ell; ++p)
        for (int k = 0; k < s[p] + shift; ++k) beta.push_back(p + k * ell);
    std::sort(beta.rbegin(), beta.rend());
    const int beads = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int k = 1; k <= beads; ++k)
        if (int part = beta[k - 1] + k - beads; part > 0) parts.push_back(part);
    return Partition(parts);
}

int zero_nodes(const Partition& lambda, int ell) {
    int count = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j)
            if (mod(j - i, ell) == 0) ++count;
    return count;
}

namespace {

void multiply_linear(std::vector<int>& poly, int c, int ell) {
    std::vector<int> out(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
        out[k] = mod(out[k] + static_cast<int64_t>(poly[k]) * c, ell);
        out[k + 1] = mod(out[k + 1] + poly[k], ell);
    }
    poly = std::move(out);
}

}  // namespace

std::vector<int> content_polynomial_mod(const Partition& lambda, int ell) {
    std::vector<int> poly{mod(1, ell)};
    for (int c : content_polynomial(lambda)) multiply_linear(poly, mod(c, ell), ell);
    return poly;
}

std::vector<int> core_times_ribbons_mod(const Partition& core, int k, int ell) {
    std::vector<int> poly = content_polynomial_mod(core, ell);
    for (int t = 0; t < k; ++t)
        for (int p = 0; p < ell; ++p) multiply_linear(poly, p, ell);
    return poly;
}

std::vector<Partition> empty_core_partitions(int n, int ell) {
    std::vector<Partition> out;
    for (auto& lambda : partitions_of(n * ell))
        if (core_quotient(lambda, ell).core.empty()) out.push_back(std::move(lambda));
    return out;
}

int rhs_case1_dim(int n, int j, int m, int ell) {
    if (j < 0) return 0;
    const auto all = partitions_of(n * ell);
    const Matrix c = casimir_m_matrix_level1(n * ell, m, ell);
    std::vector<int> keep;
    std::vector<bool> kept(all.size(), false);
    for (int k = 0; k < static_cast<int>(all.size()); ++k)
        if (core_quotient(all[k], ell).core.empty()) {
            keep.push_back(k);
            kept[k] = true;
        }
    for (int a : keep)
        for (int b = 0; b < c.cols(); ++b)
            if (!kept[b] && (c.at(a, b) != 0 || c.at(b, a) != 0))
                throw InvariantFailure("m-th Casimir does not preserve the empty-core partitions of " +
                                       std::to_string(n * ell));
    const int size = static_cast<int>(keep.size());
    Matrix sub(size, size);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) sub.at(a, b) = c.at(keep[a], keep[b]);
    for (int a = 0; a < size; ++a) sub.at(a, a) -= j;
    return static_cast<int>(nullspace(sub).size());
}

std::vector<AffineWeight> dominant_lifts(int ell, int m) {
    std::vector<AffineWeight> out;
    AffineWeight w(ell);
    std::function<void(int, int)> rec = [&](int p, int left) {
        if (p == ell - 1) {
            w.omega[p] = left;
            long long sum = 0;
            for (int q = 1; q < ell; ++q) sum += static_cast<long long>(q) * w.omega[q];
            if (mod(sum, ell) == 0) out.push_back(w);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            w.omega[p] = x;
            rec(p + 1, left - x);
        }
    };
    rec(0, m);
    std::sort(out.begin(), out.end(), [](const AffineWeight& a, const AffineWeight& b) { return a.omega < b.omega; });
    return out;
}

std::vector<AffineWeight> gamma_hat_image(int ell, int m) {
    std::vector<AffineWeight> out;
    for (const auto& lambda : bounded_tuples(ell, m, 0, m)) out.push_back(gamma_hat(lambda.entries, m));
    std::sort(out.begin(), out.end(), [](const AffineWeight& a, const AffineWeight& b) { return a.omega < b.omega; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AffineWeight weight_of_basic(const AffineWeight& beta, int i) {
    AffineWeight mu = AffineWeight::fundamental(0, beta.rank()) + beta;
    mu.delta = -weight_pairing(beta, beta) / 2 - i;
    return mu;
}

bool is_extremal(const AffineWeight& mu) { return weight_pairing(mu, mu) == 0; }

}  // namespace fockforge
