#include "fockforge/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace fockforge {

// ---------------------------------------------------------------------------
// SymFunc / WreathFunc containers

SymFunc::SymFunc(Basis basis, int degree_bound) : basis_(basis), bound_(degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

SymFunc SymFunc::one(int degree_bound, Basis basis) {
    SymFunc f(basis, degree_bound);
    f.add(Partition(), 1);
    return f;
}

SymFunc SymFunc::schur(const Partition& lambda, int degree_bound) {
    SymFunc f(Basis::Schur, degree_bound);
    f.add(lambda, 1);
    return f;
}

SymFunc SymFunc::power(const Partition& lambda, int degree_bound) {
    SymFunc f(Basis::Power, degree_bound);
    f.add(lambda, 1);
    return f;
}

Rational SymFunc::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const {
    int d = -1;
    for (const auto& [lambda, c] : coeffs_) d = std::max(d, lambda.size());
    return d;
}

void SymFunc::add(const Partition& lambda, const Rational& c) {
    if (lambda.size() > bound_)
        throw std::domain_error("term " + to_string(lambda) + " exceeds degree bound " + std::to_string(bound_));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void SymFunc::require_compatible(const SymFunc& other) const {
    if (basis_ != other.basis_) throw std::invalid_argument("symmetric functions in different bases");
    if (bound_ != other.bound_) throw std::invalid_argument("symmetric functions with different degree bounds");
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    require_compatible(other);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    require_compatible(other);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lambda, x] : coeffs_) x *= c;
    return *this;
}

WreathFunc::WreathFunc(int ell, int degree_bound) : ell_(ell), bound_(degree_bound) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

WreathFunc WreathFunc::one(int ell, int degree_bound) {
    WreathFunc f(ell, degree_bound);
    f.add(Multipartition(ell), 1);
    return f;
}

WreathFunc WreathFunc::schur(const Multipartition& lambda, int degree_bound) {
    WreathFunc f(lambda.ell(), degree_bound);
    f.add(lambda, 1);
    return f;
}

WreathFunc WreathFunc::power(const Multipartition& lambda, int degree_bound) {
    WreathFunc f = one(lambda.ell(), degree_bound);
    for (int p = 0; p < lambda.ell(); ++p)
        for (int part : lambda[p].parts()) f = wreath_mult_by_P(part, p, f);
    return f;
}

Rational WreathFunc::coeff(const Multipartition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void WreathFunc::add(const Multipartition& lambda, const Rational& c) {
    if (lambda.ell() != ell_) throw std::invalid_argument("multipartition has the wrong number of components");
    if (lambda.size() > bound_)
        throw std::domain_error("term " + to_string(lambda) + " exceeds degree bound " + std::to_string(bound_));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void WreathFunc::require_compatible(const WreathFunc& other) const {
    if (ell_ != other.ell_ || bound_ != other.bound_)
        throw std::invalid_argument("wreath functions with different ell or degree bound");
}

WreathFunc& WreathFunc::operator+=(const WreathFunc& other) {
    require_compatible(other);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
    return *this;
}

WreathFunc& WreathFunc::operator-=(const WreathFunc& other) {
    require_compatible(other);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, -c);
    return *this;
}

WreathFunc& WreathFunc::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lambda, x] : coeffs_) x *= c;
    return *this;
}

// ---------------------------------------------------------------------------
// Border strips on the abacus: a strip of size r moves one bead from b to b + r.

namespace {

std::vector<int> beta_set(const Partition& lambda, int L) {
    std::vector<int> beta(static_cast<std::size_t>(L));
    for (int k = 1; k <= L; ++k) beta[k - 1] = lambda.row(k) - k + L;
    return beta;  // strictly decreasing
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int k = 1; k <= L; ++k)
        if (int part = beta[k - 1] - (L - k); part > 0) parts.push_back(part);
    return Partition(std::move(parts));
}

std::vector<std::pair<Partition, int>> move_beads(const Partition& lambda, int shift, int L) {
    std::vector<int> beta = beta_set(lambda, L);
    std::set<int> occupied(beta.begin(), beta.end());
    std::vector<std::pair<Partition, int>> out;
    for (std::size_t k = 0; k < beta.size(); ++k) {
        const int from = beta[k];
        const int to = from + shift;
        if (to < 0 || occupied.count(to)) continue;
        const int lo = std::min(from, to), hi = std::max(from, to);
        int between = 0;
        for (int b : beta)
            if (b > lo && b < hi) ++between;
        std::vector<int> moved = beta;
        moved[k] = to;
        out.emplace_back(partition_from_beta(std::move(moved)), between % 2 == 0 ? 1 : -1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<Partition, int>> add_border_strips(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("border strip size must be positive");
    return move_beads(lambda, r, lambda.length() + r);
}

std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("border strip size must be positive");
    return move_beads(lambda, -r, lambda.length());
}

// ---------------------------------------------------------------------------
// Character table cache: power_to_schur(rho) for every rho, memoized.

namespace {

using Expansion = std::map<Partition, Integer>;

const Expansion& power_expansion(const Partition& rho) {
    static std::mutex mutex;
    static std::map<Partition, Expansion> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(rho); it != cache.end()) return it->second;
    Expansion cur{{Partition(), 1}};
    for (int part : rho.parts()) {
        Expansion next;
        for (const auto& [lambda, c] : cur)
            for (const auto& [mu, sign] : add_border_strips(lambda, part)) next[mu] += c * sign;
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        cur = std::move(next);
    }
    return cache.emplace(rho, std::move(cur)).first->second;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) return 0;
    const Expansion& e = power_expansion(rho);
    auto it = e.find(lambda);
    return it == e.end() ? Integer(0) : it->second;
}

SymFunc mult_by_power_sum(int r, const SymFunc& f) {
    if (r < 1) throw std::invalid_argument("power sum index must be positive");
    const SymFunc g = to_schur(f);
    SymFunc out(Basis::Schur, g.degree_bound());
    for (const auto& [lambda, c] : g.coeffs()) {
        if (lambda.size() + r > g.degree_bound()) continue;
        for (const auto& [mu, sign] : add_border_strips(lambda, r)) out.add(mu, sign * c);
    }
    return out;
}

SymFunc power_to_schur(const Partition& rho, int degree_bound) {
    SymFunc out(Basis::Schur, degree_bound);
    for (const auto& [lambda, c] : power_expansion(rho)) out.add(lambda, Rational(c));
    return out;
}

SymFunc schur_to_power(const Partition& lambda, int degree_bound) {
    SymFunc out(Basis::Power, degree_bound);
    for (const auto& rho : partitions_of(lambda.size()))
        out.add(rho, ratio(character(lambda, rho), z_value(rho)));
    return out;
}

SymFunc to_schur(const SymFunc& f) {
    if (f.basis() == Basis::Schur) return f;
    SymFunc out(Basis::Schur, f.degree_bound());
    for (const auto& [rho, c] : f.coeffs()) out += c * power_to_schur(rho, f.degree_bound());
    return out;
}

SymFunc to_power(const SymFunc& f) {
    if (f.basis() == Basis::Power) return f;
    SymFunc out(Basis::Power, f.degree_bound());
    for (const auto& [lambda, c] : f.coeffs()) out += c * schur_to_power(lambda, f.degree_bound());
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.degree_bound() != g.degree_bound()) throw std::invalid_argument("symmetric functions with different degree bounds");
    const SymFunc fs = to_schur(f);
    SymFunc out(Basis::Schur, f.degree_bound());
    for (const auto& [rho, c] : to_power(g).coeffs()) {
        SymFunc term = fs;
        for (int part : rho.parts()) term = mult_by_power_sum(part, term);
        out += c * term;
    }
    return f.basis() == Basis::Schur ? out : to_power(out);
}

Rational hall_pairing(const SymFunc& f, const SymFunc& g) {
    if (f.degree_bound() != g.degree_bound()) throw std::invalid_argument("symmetric functions with different degree bounds");
    const SymFunc a = to_schur(f), b = to_schur(g);
    Rational total = 0;
    for (const auto& [lambda, c] : a.coeffs()) total += c * b.coeff(lambda);
    return total;
}

SymFunc plethysm_psi_m(int m, const SymFunc& f) {
    if (m < 1) throw std::invalid_argument("plethysm index must be positive");
    SymFunc out(Basis::Power, f.degree_bound());
    for (const auto& [rho, c] : to_power(f).coeffs()) {
        if (m * rho.size() > f.degree_bound())
            throw std::domain_error("psi^" + std::to_string(m) + " of degree " + std::to_string(rho.size()) +
                                    " exceeds degree bound " + std::to_string(f.degree_bound()));
        out.add(dilate(m, rho), c);
    }
    return f.basis() == Basis::Power ? out : to_schur(out);
}

// ---------------------------------------------------------------------------
// Lambda_Gamma

Rational wreath_pairing(const WreathFunc& f, const WreathFunc& g) {
    if (f.ell() != g.ell() || f.degree_bound() != g.degree_bound())
        throw std::invalid_argument("wreath functions with different ell or degree bound");
    Rational total = 0;
    for (const auto& [lambda, c] : f.coeffs()) total += c * g.coeff(lambda);
    return total;
}

WreathFunc wreath_mult_by_P(int r, int p, const WreathFunc& f) {
    if (r < 1) throw std::invalid_argument("power sum index must be positive");
    if (p < 0 || p >= f.ell()) throw std::invalid_argument("component index out of range");
    WreathFunc out(f.ell(), f.degree_bound());
    for (const auto& [lambda, c] : f.coeffs()) {
        if (lambda.size() + r > f.degree_bound()) continue;
        for (const auto& [mu, sign] : add_border_strips(lambda[p], r)) out.add(lambda.with_component(p, mu), sign * c);
    }
    return out;
}

SymFunc restrict_to_sym(const WreathFunc& f) {
    const int bound = f.degree_bound();
    SymFunc out(Basis::Schur, bound);
    for (const auto& [lambda, c] : f.coeffs()) {
        SymFunc term = SymFunc::one(bound);
        for (const auto& part : lambda.components())
            if (!part.empty()) term = multiply(term, SymFunc::schur(part, bound));
        out += c * term;
    }
    return out;
}

WreathFunc induce_from_sym(const SymFunc& f, int ell) {
    WreathFunc out(ell, f.degree_bound());
    for (const auto& [rho, c] : to_power(f).coeffs()) {
        WreathFunc term = WreathFunc::one(ell, f.degree_bound());
        for (int part : rho.parts()) {
            WreathFunc next(ell, f.degree_bound());
            for (int p = 0; p < ell; ++p) next += wreath_mult_by_P(part, p, term);
            term = std::move(next);
        }
        out += c * term;
    }
    return out;
}

Multipartition rotate_tau(const Multipartition& lambda) {
    const int ell = lambda.ell();
    std::vector<Partition> comps(static_cast<std::size_t>(ell));
    for (int p = 0; p < ell; ++p) comps[p] = lambda[(p + 1) % ell];
    return Multipartition(std::move(comps));
}

nlohmann::json to_json(const SymFunc& f) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [lambda, c] : f.coeffs()) out[to_string(lambda)] = to_string(c);
    return out;
}

nlohmann::json to_json(const WreathFunc& f) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [lambda, c] : f.coeffs()) out[to_string(lambda)] = to_string(c);
    return out;
}

}  // namespace fockforge
