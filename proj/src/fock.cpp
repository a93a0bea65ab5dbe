#include "fockforge/fock.hpp"

#include <iterator>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "fockforge/symfunc.hpp"

namespace fockforge {

void FockSpaceParams::validate() const {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (ell < 1) throw std::invalid_argument("ell must be at least 1");
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    if (charge.ell() != ell)
        throw std::invalid_argument("charge has " + std::to_string(charge.ell()) + " entries, expected " + std::to_string(ell));
}

FockVector::FockVector(FockSpaceParams params) : params_(std::move(params)) { params_.validate(); }

FockVector FockVector::basis(const FockSpaceParams& params, const Multipartition& lambda) {
    FockVector v(params);
    v.add(lambda, 1);
    return v;
}

Rational FockVector::coeff(const Multipartition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void FockVector::add(const Multipartition& lambda, const Rational& c) {
    if (lambda.ell() != params_.ell) throw std::invalid_argument("multipartition has the wrong number of components");
    if (lambda.size() > params_.degree_bound)
        throw std::domain_error("|" + to_string(lambda) + "> exceeds degree bound " + std::to_string(params_.degree_bound));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void FockVector::require_same_space(const FockVector& other) const {
    if (!(params_ == other.params_)) throw std::invalid_argument("Fock vectors from different spaces");
}

FockVector& FockVector::operator+=(const FockVector& other) {
    require_same_space(other);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
    require_same_space(other);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lambda, x] : coeffs_) x *= c;
    return *this;
}

FockVector apply_e(int q, const FockVector& v) {
    const auto& params = v.params();
    FockVector out(params);
    for (const auto& [lambda, c] : v.coeffs())
        for (const Node& node : addable_removable(lambda, params.charge, params.m, q).removable)
            out.add(lambda.with_component(node.component, remove_node(lambda[node.component], node.row)), c);
    return out;
}

FockVector apply_f(int q, const FockVector& v) {
    const auto& params = v.params();
    FockVector out(params);
    for (const auto& [lambda, c] : v.coeffs()) {
        if (lambda.size() + 1 > params.degree_bound) continue;
        for (const Node& node : addable_removable(lambda, params.charge, params.m, q).addable)
            out.add(lambda.with_component(node.component, add_node(lambda[node.component], node.row)), c);
    }
    return out;
}

FockVector apply_b(int r, const FockVector& v) {
    if (r < 1) throw std::invalid_argument("Heisenberg index must be positive");
    const auto& params = v.params();
    const int bound = params.degree_bound;
    WreathFunc transported(params.ell, bound);
    for (const auto& [lambda, c] : v.coeffs()) transported.add(rotate_tau(lambda), c);

    WreathFunc product(params.ell, bound);
    for (int p = 0; p < params.ell; ++p) product += wreath_mult_by_P(params.m * r, p, transported);

    FockVector out(params);
    for (const auto& [mu, c] : product.coeffs()) {
        // tau^{-1} = tau^{ell-1}
        Multipartition back = mu;
        for (int k = 1; k < params.ell; ++k) back = rotate_tau(back);
        out.add(back, c);
    }
    return out;
}

namespace {

using DualTable = std::map<Multipartition, std::vector<std::pair<Multipartition, Rational>>>;

// Transpose of b_r from degree n - mr to degree n, keyed by the degree-n basis.
// It depends only on (ell, m, r, n), so it is shared between charges.
const DualTable& dual_table(int ell, int m, int r, int n) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, std::unique_ptr<DualTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{ell, m, r, n}];
    if (!slot) {
        slot = std::make_unique<DualTable>();
        FockSpaceParams params{m, ell, Charge(std::vector<int>(static_cast<std::size_t>(ell), 0)), n};
        for (const auto& mu : multipartitions_of(n - m * r, ell))
            for (const auto& [lambda, c] : apply_b(r, FockVector::basis(params, mu)).coeffs())
                (*slot)[lambda].emplace_back(mu, c);
    }
    return *slot;
}

}  // namespace

FockVector apply_b_dual(int r, const FockVector& v) {
    if (r < 1) throw std::invalid_argument("Heisenberg index must be positive");
    const auto& params = v.params();
    const int shift = params.m * r;
    FockVector out(params);
    for (const auto& [lambda, c] : v.coeffs()) {
        const int d = lambda.size();
        if (d < shift) continue;
        const DualTable& table = dual_table(params.ell, params.m, r, d);
        if (auto it = table.find(lambda); it != table.end())
            for (const auto& [mu, x] : it->second) out.add(mu, c * x);
    }
    return out;
}

FockVector apply_casimir(const FockVector& v) {
    const auto& params = v.params();
    int top = 0;
    for (const auto& [lambda, c] : v.coeffs()) top = std::max(top, lambda.size());
    FockVector out(params);
    for (int r = 1; params.m * r <= top; ++r) out += apply_b(r, apply_b_dual(r, v));
    out *= Rational(1, params.m * params.ell);
    return out;
}

Rational fock_pairing(const FockVector& u, const FockVector& v) {
    if (!(u.params() == v.params())) throw std::invalid_argument("Fock vectors from different spaces");
    Rational total = 0;
    const auto& small = u.coeffs().size() <= v.coeffs().size() ? u : v;
    const auto& large = &small == &u ? v : u;
    for (const auto& [lambda, c] : small.coeffs()) total += c * large.coeff(lambda);
    return total;
}

Rational delta_shift(const Charge& s, int m) {
    Rational total = 0;
    for (int sp : s.entries()) {
        const int a = mod(sp, m);
        total += Rational(a) - ratio(a * a, m);
        total += Rational(sp) * (ratio(sp, m) - 1);
    }
    return total / 2;
}

AffineWeight weight_of(const Multipartition& lambda, const FockSpaceParams& params) {
    params.validate();
    const int m = params.m;
    AffineWeight w(m);
    w.delta = -delta_shift(params.charge, m);
    for (int sp : params.charge.entries()) w += AffineWeight::fundamental(sp, m);
    const std::vector<int> counts = nodes_with_residue(lambda, params.charge, m);
    for (int q = 0; q < m; ++q) w -= counts[q] * AffineWeight::simple_root(q, m);
    return w;
}

namespace {

template <class Key>
std::map<Key, int> index_of(const std::vector<Key>& keys) {
    std::map<Key, int> out;
    for (int k = 0; k < static_cast<int>(keys.size()); ++k) out.emplace(keys[k], k);
    return out;
}

// (1/level) sum_r B_r B_r^T
Matrix gram_casimir(const std::vector<Matrix>& blocks, int dim, int level) {
    Matrix out(dim, dim);
    for (const Matrix& b : blocks) out += b * b.transpose();
    out *= Rational(1, level);
    return out;
}

}  // namespace

Matrix b_matrix(int r, int n, const FockSpaceParams& params) {
    FockSpaceParams wide = params;
    wide.degree_bound = std::max(params.degree_bound, n + params.m * r);
    const auto source = multipartitions_of(n, params.ell);
    const auto target = multipartitions_of(n + params.m * r, params.ell);
    const auto row_of = index_of(target);
    Matrix out(static_cast<int>(target.size()), static_cast<int>(source.size()));
    for (int col = 0; col < static_cast<int>(source.size()); ++col)
        for (const auto& [mu, c] : apply_b(r, FockVector::basis(wide, source[col])).coeffs())
            out.at(row_of.at(mu), col) = c;
    return out;
}

Matrix casimir_matrix(int n, const FockSpaceParams& params) {
    const int dim = static_cast<int>(multipartitions_of(n, params.ell).size());
    std::vector<Matrix> blocks;
    for (int r = 1; params.m * r <= n; ++r) blocks.push_back(b_matrix(r, n - params.m * r, params));
    return gram_casimir(blocks, dim, params.m * params.ell);
}

Matrix casimir_m_matrix_level1(int n, int m, int ell) {
    if (m < 1 || ell < 1) throw std::invalid_argument("m and ell must be positive");
    const auto target = partitions_of(n);
    const auto row_of = index_of(target);
    std::vector<Matrix> blocks;
    for (int r = 1; ell * m * r <= n; ++r) {
        const int strip = ell * m * r;
        const auto source = partitions_of(n - strip);
        Matrix b(static_cast<int>(target.size()), static_cast<int>(source.size()));
        for (int col = 0; col < static_cast<int>(source.size()); ++col)
            for (const auto& [mu, sign] : add_border_strips(source[col], strip)) b.at(row_of.at(mu), col) += sign;
        blocks.push_back(std::move(b));
    }
    return gram_casimir(blocks, static_cast<int>(target.size()), m * ell);
}

std::string to_string(const FockVector& v) {
    std::string out;
    for (auto it = v.coeffs().rbegin(); it != v.coeffs().rend(); ++it) {
        const auto& [lambda, c] = *it;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const Rational a = abs(c);
        if (a != 1) out += to_string(a) + " ";
        out += to_string(lambda);
    }
    return out.empty() ? "0" : out;
}

FockVector parse_fock_vector(std::string_view text, const FockSpaceParams& params) {
    auto fail = [&] { return std::invalid_argument("malformed vector '" + std::string(text) + "'"); };
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens{std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
    FockVector out(params);
    if (tokens.size() == 1 && tokens[0] == "0") return out;
    if (tokens.empty()) throw fail();
    std::size_t k = 0;
    while (k < tokens.size()) {
        int sign = 1;
        if (k > 0) {
            if (tokens[k] != "+" && tokens[k] != "-") throw fail();
            sign = tokens[k] == "-" ? -1 : 1;
            if (++k == tokens.size()) throw fail();
        } else if (tokens[k].size() > 1 && tokens[k][0] == '-') {
            sign = -1;
            tokens[k].erase(0, 1);
        }
        Rational c = 1;
        if (tokens[k][0] != '[') {
            if (tokens[k].find_first_not_of("0123456789/") != std::string::npos) throw fail();
            try {
                c = parse_rational(tokens[k]);
            } catch (const std::invalid_argument&) {
                throw fail();
            }
            if (++k == tokens.size() || tokens[k][0] != '[') throw fail();
        }
        const Multipartition lambda = parse_multipartition(tokens[k++]);
        if (lambda.ell() != params.ell)
            throw std::invalid_argument("expected " + std::to_string(params.ell) + " components in '" + to_string(lambda) + "'");
        out.add(lambda, sign * c);
    }
    return out;
}

nlohmann::json to_json(const FockVector& v) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [lambda, c] : v.coeffs()) out[to_string(lambda)] = to_string(c);
    return out;
}

}  // namespace fockforge
