#include "fockforge/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fockforge/grading.hpp"
#include "fockforge/levelrank.hpp"

namespace fockforge {

namespace {

// A failing case is reported by returning its description; "" means the case passed.
using Body = std::function<std::string(long& cases)>;

CheckResult run_check(const std::string& name, const Body& body) {
    CheckResult result;
    result.name = name;
    long cases = 0;
    try {
        const std::string failure = body(cases);
        result.passed = failure.empty();
        result.detail = result.passed ? std::to_string(cases) + " cases" : failure;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

std::vector<Multipartition> all_multipartitions(int bound, int ell) {
    std::vector<Multipartition> out;
    for (int n = 0; n <= bound; ++n)
        for (auto& mp : multipartitions_of(n, ell)) out.push_back(std::move(mp));
    return out;
}

std::vector<int> ranks() { return {2, 3, 4}; }

// ---- Kostka numbers and the monomial route to p_r s_lambda ----

using Composition = std::vector<int>;

// Semistandard tableaux of shape nu and content mu: strip the largest letter
// as a horizontal strip, recursively.
Integer kostka(const Partition& nu, const Composition& mu, std::map<std::pair<Partition, Composition>, Integer>& memo) {
    if (mu.empty()) return nu.empty() ? 1 : 0;
    auto key = std::make_pair(nu, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int last = mu.back();
    const Composition rest(mu.begin(), mu.end() - 1);
    Integer total = 0;
    std::vector<int> inner(nu.parts().size());
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nu.length()) {
            if (left == 0) {
                std::vector<int> parts;
                for (int x : inner)
                    if (x > 0) parts.push_back(x);
                total += kostka(Partition(parts), rest, memo);
            }
            return;
        }
        const int hi = nu.row(i + 1), lo = nu.row(i + 2);
        for (int x = hi; x >= lo; --x) {
            if (hi - x > left) break;
            inner[i] = x;
            rec(i + 1, left - (hi - x));
        }
    };
    rec(0, last);
    memo.emplace(key, total);
    return total;
}

// ---- per-module checks ----

void partition_checks(const FockSpaceParams& P, std::vector<CheckResult>& out) {
    const int N = P.degree_bound;
    out.push_back(run_check("partitions/conjugation-involution", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n)
            for (const auto& lambda : partitions_of(n)) {
                ++cases;
                if (conjugate(conjugate(lambda)) != lambda) return "conjugation is not an involution on " + to_string(lambda);
            }
        return "";
    }));
    out.push_back(run_check("partitions/core-quotient-size-and-contents", [&](long& cases) -> std::string {
        for (int ell : ranks())
            for (int n = 0; n <= N; ++n)
                for (const auto& lambda : partitions_of(n)) {
                    ++cases;
                    const CoreQuotient cq = core_quotient(lambda, ell);
                    if (lambda.size() != cq.core.size() + ell * cq.quotient.size())
                        return "size identity fails for " + to_string(lambda) + " at ell=" + std::to_string(ell);
                    if (!is_core(cq.core, ell)) return to_string(cq.core) + " is not an " + std::to_string(ell) + "-core";
                    if (content_polynomial_mod(lambda, ell) != core_times_ribbons_mod(cq.core, cq.quotient.size(), ell))
                        return "content congruence fails for " + to_string(lambda) + " at ell=" + std::to_string(ell);
                }
        return "";
    }));
    out.push_back(run_check("partitions/core-quotient-round-trip", [&](long& cases) -> std::string {
        for (int ell : ranks()) {
            for (int n = 0; n <= N; ++n)
                for (const auto& lambda : partitions_of(n)) {
                    ++cases;
                    if (rebuild_from_core_quotient(core_quotient(lambda, ell), ell) != lambda)
                        return "rebuild(core_quotient) differs on " + to_string(lambda);
                }
            for (int c = 0; c <= N; ++c)
                for (const auto& core : partitions_of(c)) {
                    if (!is_core(core, ell)) continue;
                    for (int w = 0; c + ell * w <= N; ++w)
                        for (const auto& quotient : multipartitions_of(w, ell)) {
                            ++cases;
                            const CoreQuotient cq{core, quotient};
                            if (core_quotient(rebuild_from_core_quotient(cq, ell), ell) != cq)
                                return "core_quotient(rebuild) differs on core " + to_string(core) + ", quotient " +
                                       to_string(quotient);
                        }
                }
        }
        return "";
    }));
    out.push_back(run_check("partitions/residue-counts-sum-to-size", [&](long& cases) -> std::string {
        for (const auto& lambda : all_multipartitions(N, P.ell))
            for (int m = 2; m <= std::max(P.m, 4); ++m) {
                ++cases;
                const auto counts = nodes_with_residue(lambda, P.charge, m);
                if (std::accumulate(counts.begin(), counts.end(), 0) != lambda.size())
                    return "residue counts of " + to_string(lambda) + " do not sum to its size";
            }
        return "";
    }));
}

void symfunc_checks(const FockSpaceParams& P, std::vector<CheckResult>& out) {
    const int N = P.degree_bound, m = P.m;
    out.push_back(run_check("symfunc/basis-changes-inverse", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n)
            for (const auto& lambda : partitions_of(n)) {
                ++cases;
                if (to_schur(schur_to_power(lambda, N)) != SymFunc::schur(lambda, N))
                    return "power_to_schur(schur_to_power) is not the identity on s" + to_string(lambda);
                if (to_power(power_to_schur(lambda, N)) != SymFunc::power(lambda, N))
                    return "schur_to_power(power_to_schur) is not the identity on p" + to_string(lambda);
            }
        return "";
    }));
    out.push_back(run_check("symfunc/power-sum-adjoint", [&](long& cases) -> std::string {
        // The transpose of multiplication by p_r, read off Schur coefficients,
        // against r d/dp_r in the power basis and against strip removal.
        for (int r = 1; r <= N; ++r)
            for (int n = r; n <= N; ++n)
                for (const auto& mu : partitions_of(n)) {
                    ++cases;
                    SymFunc transpose(Basis::Schur, N);
                    for (const auto& lambda : partitions_of(n - r))
                        transpose.add(lambda, mult_by_power_sum(r, SymFunc::schur(lambda, N)).coeff(mu));
                    SymFunc derivative(Basis::Power, N);
                    for (const auto& [rho, c] : schur_to_power(mu, N).coeffs()) {
                        auto parts = rho.parts();
                        const auto count = std::count(parts.begin(), parts.end(), r);
                        if (count == 0) continue;
                        parts.erase(std::find(parts.begin(), parts.end(), r));
                        derivative.add(Partition(parts), c * Rational(r * count));
                    }
                    SymFunc strips(Basis::Schur, N);
                    for (const auto& [nu, sign] : remove_border_strips(mu, r)) strips.add(nu, Rational(sign));
                    if (to_schur(derivative) != transpose || strips != transpose)
                        return "adjoint of p_" + std::to_string(r) + " disagrees on s" + to_string(mu);
                    for (const auto& lambda : partitions_of(n - r)) {
                        const SymFunc f = SymFunc::schur(lambda, N), g = SymFunc::schur(mu, N);
                        if (hall_pairing(mult_by_power_sum(r, f), g) != hall_pairing(f, transpose))
                            return "pairing identity fails for p_" + std::to_string(r) + ", " + to_string(lambda);
                    }
                }
        return "";
    }));
    out.push_back(run_check("symfunc/psi-multiplicative", [&](long& cases) -> std::string {
        for (int a = 0; m * a <= N; ++a)
            for (int b = 0; m * (a + b) <= N; ++b)
                for (const auto& mu : partitions_of(a))
                    for (const auto& nu : partitions_of(b)) {
                        ++cases;
                        const SymFunc f = SymFunc::schur(mu, N), g = SymFunc::schur(nu, N);
                        if (to_schur(plethysm_psi_m(m, multiply(f, g))) !=
                            multiply(plethysm_psi_m(m, f), plethysm_psi_m(m, g)))
                            return "psi^" + std::to_string(m) + " is not multiplicative on s" + to_string(mu) +
                                   " s" + to_string(nu);
                    }
        return "";
    }));
    out.push_back(run_check("symfunc/wreath-induction-pairing", [&](long& cases) -> std::string {
        const int ell = P.ell;
        for (int r = 1; r <= N; ++r) {
            const WreathFunc ind = induce_from_sym(SymFunc::power(Partition({r}), N), ell);
            for (const auto& lambda : multipartitions_of(r, ell)) {
                ++cases;
                int single = 0;
                for (const auto& part : lambda.components()) single += part.parts() == std::vector<int>{r};
                if (wreath_pairing(ind, WreathFunc::power(lambda, N)) != Rational(r * single))
                    return "<Ind p_" + std::to_string(r) + ", P" + to_string(lambda) + "> is wrong";
            }
            for (const auto& rho : partitions_of(r)) {
                ++cases;
                const Rational expected = rho.length() == 1 ? Rational(r * ell) : Rational(0);
                if (wreath_pairing(ind, induce_from_sym(SymFunc::power(rho, N), ell)) != expected)
                    return "<Ind p_" + std::to_string(r) + ", Ind p" + to_string(rho) + "> is wrong";
            }
        }
        return "";
    }));
    out.push_back(run_check("symfunc/power-product-monomial-oracle", [&](long& cases) -> std::string {
        for (int r = 1; r <= 4; ++r)
            for (int n = 0; n <= std::min(N, 6); ++n)
                for (const auto& lambda : partitions_of(n)) {
                    ++cases;
                    if (mult_by_power_sum(r, SymFunc::schur(lambda, n + r)) != kostka_power_product(r, lambda))
                        return "p_" + std::to_string(r) + " s" + to_string(lambda) + " disagrees with the monomial expansion";
                }
        return "";
    }));
}

void fock_checks(const FockSpaceParams& P, std::vector<CheckResult>& out) {
    const int N = P.degree_bound, m = P.m;
    const auto basis = all_multipartitions(N, P.ell);
    auto vec = [&](const Multipartition& mp) { return FockVector::basis(P, mp); };

    out.push_back(run_check("fock/chevalley-relations", [&](long& cases) -> std::string {
        for (const auto& lambda : basis) {
            if (lambda.size() >= N) continue;
            for (int q = 0; q < m; ++q)
                for (int q2 = 0; q2 < m; ++q2) {
                    ++cases;
                    const FockVector v = vec(lambda);
                    FockVector lhs = apply_e(q, apply_f(q2, v)) - apply_f(q2, apply_e(q, v));
                    FockVector rhs(P);
                    if (q == q2) {
                        const auto ar = addable_removable(lambda, P.charge, m, q);
                        const int diff = static_cast<int>(ar.addable.size()) - static_cast<int>(ar.removable.size());
                        rhs = Rational(diff) * v;
                    }
                    if (lhs != rhs)
                        return "[e_" + std::to_string(q) + ", f_" + std::to_string(q2) + "] fails on " + to_string(lambda);
                }
        }
        return "";
    }));
    out.push_back(run_check("fock/heisenberg-commutes-with-slm", [&](long& cases) -> std::string {
        for (int r = 1; m * r <= N; ++r)
            for (const auto& lambda : basis)
                for (int q = 0; q < m; ++q) {
                    const FockVector v = vec(lambda);
                    ++cases;
                    if (lambda.size() + m * r <= N && apply_e(q, apply_b(r, v)) != apply_b(r, apply_e(q, v)))
                        return "[e_" + std::to_string(q) + ", b_" + std::to_string(r) + "] != 0 on " + to_string(lambda);
                    if (lambda.size() + m * r + 1 <= N && apply_f(q, apply_b(r, v)) != apply_b(r, apply_f(q, v)))
                        return "[f_" + std::to_string(q) + ", b_" + std::to_string(r) + "] != 0 on " + to_string(lambda);
                    if (apply_e(q, apply_b_dual(r, v)) != apply_b_dual(r, apply_e(q, v)))
                        return "[e_" + std::to_string(q) + ", b'_" + std::to_string(r) + "] != 0 on " + to_string(lambda);
                }
        return "";
    }));
    out.push_back(run_check("fock/heisenberg-level", [&](long& cases) -> std::string {
        for (int r = 1; m * r <= N; ++r)
            for (int t = 1; m * t <= N; ++t)
                for (const auto& lambda : basis) {
                    if (lambda.size() + m * t > N) continue;
                    ++cases;
                    const FockVector v = vec(lambda);
                    const FockVector lhs = apply_b_dual(r, apply_b(t, v)) - apply_b(t, apply_b_dual(r, v));
                    const FockVector rhs = r == t ? Rational(r * m * P.ell) * v : FockVector(P);
                    if (lhs != rhs)
                        return "[b'_" + std::to_string(r) + ", b_" + std::to_string(t) + "] fails on " + to_string(lambda);
                }
        return "";
    }));
    out.push_back(run_check("fock/casimir-symmetric-with-commutator", [&](long& cases) -> std::string {
        for (const auto& lambda : basis) {
            ++cases;
            const FockVector v = vec(lambda);
            const FockVector c = apply_casimir(v);
            for (const auto& [mu, x] : c.coeffs())
                if (apply_casimir(vec(mu)).coeff(lambda) != x)
                    return "Casimir is not symmetric at " + to_string(lambda) + ", " + to_string(mu);
            for (int r = 1; lambda.size() + m * r <= N; ++r)
                if (apply_casimir(apply_b(r, v)) - apply_b(r, c) != Rational(r) * apply_b(r, v))
                    return "[Casimir, b_" + std::to_string(r) + "] != r b_r on " + to_string(lambda);
        }
        return "";
    }));
    out.push_back(run_check("fock/casimir-kernel-is-heisenberg-kernel", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n) {
            std::map<std::vector<int>, std::vector<Multipartition>> blocks;
            for (auto& lambda : multipartitions_of(n, P.ell))
                blocks[nodes_with_residue(lambda, P.charge, m)].push_back(lambda);
            for (const auto& [w, members] : blocks) {
                ++cases;
                const int dim = static_cast<int>(members.size());
                Matrix cas(dim, dim);
                std::map<Multipartition, int> rows;
                std::vector<FockVector> vectors;
                for (int k = 0; k < dim; ++k) {
                    const FockVector v = vec(members[k]);
                    const FockVector c = apply_casimir(v);
                    for (int a = 0; a < dim; ++a) cas.at(a, k) = c.coeff(members[a]);
                    for (int r = 1; m * r <= n; ++r)
                        for (const auto& [mu, x] : apply_b_dual(r, v).coeffs()) rows.try_emplace(mu, 0);
                    vectors.push_back(v);
                }
                int next = 0;
                for (auto& [mu, row] : rows) row = next++;
                // b'_r of different r land in different degrees, so one row per target suffices.
                Matrix stacked(next, dim);
                for (int k = 0; k < dim; ++k)
                    for (int r = 1; m * r <= n; ++r)
                        for (const auto& [mu, x] : apply_b_dual(r, vectors[k]).coeffs()) stacked.at(rows.at(mu), k) = x;
                const auto ker_cas = nullspace(cas);
                const auto ker_b = next == 0 ? nullspace(Matrix(1, dim)) : nullspace(stacked);
                if (ker_cas.size() != ker_b.size())
                    return "ker Casimir and the joint kernel of b' differ in dimension in degree " + std::to_string(n);
                for (const auto& v : ker_b)
                    if (!is_zero(cas.apply(v))) return "a joint kernel vector of b' is not killed by the Casimir";
            }
        }
        return "";
    }));
    out.push_back(run_check("fock/weight-shifts", [&](long& cases) -> std::string {
        for (const auto& lambda : basis)
            for (int q = 0; q < m; ++q) {
                ++cases;
                const AffineWeight w = weight_of(lambda, P);
                const AffineWeight alpha = AffineWeight::simple_root(q, m);
                for (const auto& [mu, x] : apply_e(q, vec(lambda)).coeffs())
                    if (weight_of(mu, P) != w + alpha) return "e_" + std::to_string(q) + " does not raise by alpha_q";
                for (const auto& [mu, x] : apply_f(q, vec(lambda)).coeffs())
                    if (weight_of(mu, P) != w - alpha) return "f_" + std::to_string(q) + " does not lower by alpha_q";
            }
        return "";
    }));
}

void grading_checks(const FockSpaceParams& P, GradingEngine& engine, std::vector<CheckResult>& out) {
    const int N = P.degree_bound, m = P.m;
    out.push_back(run_check("grading/casimir-commutes-with-slm", [&](long& cases) -> std::string {
        for (const auto& lambda : all_multipartitions(N, P.ell))
            for (int q = 0; q < m; ++q) {
                ++cases;
                const FockVector v = FockVector::basis(P, lambda);
                if (apply_casimir(apply_e(q, v)) != apply_e(q, apply_casimir(v)))
                    return "Casimir does not commute with e_" + std::to_string(q) + " on " + to_string(lambda);
                if (lambda.size() < N && apply_casimir(apply_f(q, v)) != apply_f(q, apply_casimir(v)))
                    return "Casimir does not commute with f_" + std::to_string(q) + " on " + to_string(lambda);
            }
        return "";
    }));
    out.push_back(run_check("grading/casimir-spectrum", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n) {
            int total = 0;
            for (int j = 0; j <= n; ++j)
                for (const auto& v : engine.casimir_eigenspace(n, j).basis) {
                    ++cases;
                    if (apply_casimir(v) != Rational(j) * v)
                        return "eigenspace vector of degree " + std::to_string(n) + " fails Casimir = " + std::to_string(j);
                    ++total;
                }
            if (Integer(total) != count_multipartitions(n, P.ell))
                return "eigenspaces of degree " + std::to_string(n) + " do not fill the space";
        }
        return "";
    }));
    out.push_back(run_check("grading/table-support-and-total", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n) {
            const GradedTable t = engine.graded_dims(n);
            for (const auto& [ij, d] : t.entries) {
                ++cases;
                if (ij.first + m * ij.second > n)
                    return "entry (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") of degree " +
                           std::to_string(n) + " breaks i + mj <= n";
            }
            if (Integer(t.total()) != count_multipartitions(n, P.ell))
                return "table of degree " + std::to_string(n) + " does not sum to the dimension";
        }
        return "";
    }));
    out.push_back(run_check("grading/filtration-monotone", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n) {
            const GradedTable t = engine.graded_dims(n);
            for (int i1 = 0; i1 <= n; ++i1)
                for (int j1 = 0; m * j1 <= n; ++j1)
                    for (int i = 0; i <= n; ++i)
                        for (int j = 0; m * j <= n; ++j) {
                            if (!filtration_leq(i1, j1, i, j, m)) continue;
                            ++cases;
                            if (cumulative_dim(t, i1, j1, m) > cumulative_dim(t, i, j, m))
                                return "cumulative dimensions decrease in degree " + std::to_string(n);
                        }
        }
        return "";
    }));
    out.push_back(run_check("grading/deconvolution-round-trip", [&](long& cases) -> std::string {
        const auto h = engine.findim_counts();
        for (int n = 0; n <= N; ++n) {
            ++cases;
            long long k = 0;
            for (int r = 0; m * r <= n; ++r) k += partition_count(r) * h[n - m * r];
            if (k != engine.highest_weight_space(n).dim())
                return "K_" + std::to_string(n) + " is not recovered from h";
            if (h[n] != engine.singular_space(n).dim())
                return "h_" + std::to_string(n) + " differs from the singular dimension";
        }
        return "";
    }));
    out.push_back(run_check("grading/highest-weight-eigen-split", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n)
            for (int j = 0; m * j <= n; ++j) {
                ++cases;
                if (!engine.isom1_check(n, j))
                    return "dim(hw cap E_" + std::to_string(j) + ") != p(j) h_(n-mj) in degree " + std::to_string(n);
            }
        return "";
    }));
    out.push_back(run_check("grading/depth-spaces-stable-under-f", [&](long& cases) -> std::string {
        for (int n = 1; n <= N; ++n)
            for (int i = 1; i <= n; ++i) {
                // Group the target depth space by weight so each test is a small echelon reduction.
                std::map<std::vector<int>, std::pair<std::vector<Multipartition>, std::vector<FockVector>>> by_weight;
                for (const auto& v : engine.depth_space(n, i).basis) {
                    const auto w = nodes_with_residue(v.coeffs().begin()->first, P.charge, m);
                    by_weight[w].second.push_back(v);
                }
                for (auto& lambda : multipartitions_of(n, P.ell))
                    by_weight[nodes_with_residue(lambda, P.charge, m)].first.push_back(lambda);
                std::map<std::vector<int>, EchelonBasis> spans;
                auto coords = [](const std::vector<Multipartition>& members, const FockVector& v) {
                    Vector x(members.size());
                    for (const auto& [mu, c] : v.coeffs())
                        x[std::lower_bound(members.begin(), members.end(), mu) - members.begin()] = c;
                    return x;
                };
                for (auto& [w, entry] : by_weight) {
                    std::sort(entry.first.begin(), entry.first.end());
                    EchelonBasis span(static_cast<int>(entry.first.size()));
                    for (const auto& v : entry.second) span.insert(coords(entry.first, v));
                    spans.emplace(w, std::move(span));
                }
                for (const auto& v : engine.depth_space(n - 1, i - 1).basis)
                    for (int q = 0; q < m; ++q) {
                        ++cases;
                        const FockVector image = apply_f(q, v);
                        if (image.is_zero()) continue;
                        const auto w = nodes_with_residue(image.coeffs().begin()->first, P.charge, m);
                        auto it = spans.find(w);
                        if (it == spans.end() || !it->second.contains(coords(by_weight.at(w).first, image)))
                            return "f_" + std::to_string(q) + " D(" + std::to_string(n - 1) + "," + std::to_string(i - 1) +
                                   ") is not inside D(" + std::to_string(n) + "," + std::to_string(i) + ")";
                    }
            }
        return "";
    }));
}

void crystal_checks(const FockSpaceParams& P, const NodeOrder& order, GradingEngine& engine,
                    std::vector<CheckResult>& out) {
    const int N = P.degree_bound, m = P.m;
    const CrystalGraph g = build_graph(P, order);
    out.push_back(run_check("crystal/operators-inverse-and-string-lengths", [&](long& cases) -> std::string {
        for (const auto& vert : g.vertices)
            for (int q = 0; q < m; ++q) {
                ++cases;
                const Multipartition& lambda = vert.mp;
                if (auto up = tilde_e(q, lambda, P, order)) {
                    auto back = tilde_f(q, *up, P, order);
                    if (!back || *back != lambda) return "f~ e~ is not the identity on " + to_string(lambda);
                }
                if (auto down = tilde_f(q, lambda, P, order)) {
                    auto back = tilde_e(q, *down, P, order);
                    if (!back || *back != lambda) return "e~ f~ is not the identity on " + to_string(lambda);
                }
                int eps = 0, phi = 0;
                for (auto x = tilde_e(q, lambda, P, order); x; x = tilde_e(q, *x, P, order)) ++eps;
                // A q-string has length at most the number of q-nodes that can ever be added.
                const int cap = lambda.size() + 4 * (N + P.ell + 4);
                for (auto x = tilde_f(q, lambda, P, order); x && phi <= cap; x = tilde_f(q, *x, P, order)) ++phi;
                const auto ar = addable_removable(lambda, P.charge, m, q);
                if (phi - eps != static_cast<int>(ar.addable.size()) - static_cast<int>(ar.removable.size()))
                    return "q-string through " + to_string(lambda) + " disagrees with A_q - R_q";
            }
        return "";
    }));
    out.push_back(run_check("crystal/highest-weight-count", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n) {
            ++cases;
            const int crystal = highest_weight_count(g, n), kernel = engine.highest_weight_space(n).dim();
            if (crystal != kernel)
                return "degree " + std::to_string(n) + ": " + std::to_string(crystal) + " highest-weight vertices, kernel dimension " +
                       std::to_string(kernel);
        }
        return "";
    }));
    out.push_back(run_check("crystal/depth-census", [&](long& cases) -> std::string {
        for (int n = 0; n <= N; ++n) {
            const auto census = depth_census(g, n);
            std::map<int, int> expected;
            for (const auto& [ij, d] : engine.graded_dims(n).entries) expected[ij.first] += d;
            ++cases;
            if (census != expected) return "depth census of degree " + std::to_string(n) + " differs from the graded table";
        }
        return "";
    }));
    out.push_back(run_check("crystal/raising-lowers-depth", [&](long& cases) -> std::string {
        for (const auto& vert : g.vertices)
            for (int q = 0; q < m; ++q)
                if (auto up = tilde_e(q, vert.mp, P, order)) {
                    ++cases;
                    const CrystalVertex& parent = g.vertices[g.index.at(*up)];
                    if (parent.depth != vert.depth - 1 || parent.component_id != vert.component_id)
                        return "e~_" + std::to_string(q) + " of " + to_string(vert.mp) + " leaves its string of depths";
                }
        return "";
    }));
}

std::vector<Charge> weight_zero_charges(int ell, int bound) {
    std::vector<Charge> out;
    std::vector<int> s(static_cast<std::size_t>(ell));
    std::function<void(int, int)> rec = [&](int p, int sum) {
        if (p == ell - 1) {
            s[p] = -sum;
            if (std::abs(s[p]) <= bound) out.emplace_back(s);
            return;
        }
        for (int x = -bound; x <= bound; ++x) {
            s[p] = x;
            rec(p + 1, sum + x);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<AffineWeight> root_window(int ell, int bound) {
    std::vector<AffineWeight> out;
    std::vector<int> b(static_cast<std::size_t>(ell - 1));
    std::function<void(int)> rec = [&](int p) {
        if (p == ell - 1) {
            const AffineWeight w = finite_weight(b, ell);
            if (in_root_lattice(w)) out.push_back(w);
            return;
        }
        for (int x = -bound; x <= bound; ++x) {
            b[p] = x;
            rec(p + 1);
        }
    };
    rec(0);
    return out;
}

void levelrank_checks(const FockSpaceParams& P, GradingEngine& engine, std::vector<CheckResult>& out) {
    const int N = P.degree_bound, m = P.m, ell = P.ell;
    std::vector<int> lattice_ranks{ell, m};
    std::sort(lattice_ranks.begin(), lattice_ranks.end());
    lattice_ranks.erase(std::unique(lattice_ranks.begin(), lattice_ranks.end()), lattice_ranks.end());

    out.push_back(run_check("levelrank/xi-isometry-and-group-law", [&](long& cases) -> std::string {
        for (int k : lattice_ranks) {
            const auto window = root_window(k, 2);
            std::vector<AffineWeight> probes;
            for (int p = 0; p < k; ++p) {
                probes.push_back(AffineWeight::fundamental(p, k));
                probes.push_back(AffineWeight::fundamental(p, k) + AffineWeight::fundamental(0, k) - AffineWeight::null_root(k));
            }
            for (const auto& beta : window)
                for (const auto& beta2 : window)
                    for (const auto& mu : probes) {
                        ++cases;
                        if (xi_action(beta, xi_action(beta2, mu)) != xi_action(beta + beta2, mu))
                            return "xi is not a group action at rank " + std::to_string(k);
                        for (const auto& nu : probes)
                            if (weight_pairing(xi_action(beta, mu), xi_action(beta, nu)) != weight_pairing(mu, nu))
                                return "xi is not an isometry at rank " + std::to_string(k);
                    }
        }
        return "";
    }));
    out.push_back(run_check("levelrank/gamma-hat-from-translation", [&](long& cases) -> std::string {
        for (const auto& s : weight_zero_charges(ell, 4)) {
            ++cases;
            const AffineWeight gamma = gamma_of_charge(s);
            const AffineWeight lhs = gamma_hat(s.entries(), m);
            const AffineWeight rhs = level_lift(xi_action(-gamma, AffineWeight::fundamental(0, ell)), m);
            if (lhs != rhs) return "gamma_hat(" + to_string(s) + ") differs from the lifted translate";
        }
        return "";
    }));
    out.push_back(run_check("levelrank/dominant-lifts-are-gamma-hat-image", [&](long& cases) -> std::string {
        ++cases;
        if (dominant_lifts(ell, m) != gamma_hat_image(ell, m))
            return "dominant lifts and gamma_hat(A(" + std::to_string(ell) + "," + std::to_string(m) + ")_0) differ";
        return "";
    }));
    out.push_back(run_check("levelrank/extremal-criterion", [&](long& cases) -> std::string {
        for (int k : lattice_ranks)
            for (const auto& beta : root_window(k, 2))
                for (int i = 0; i <= 2; ++i) {
                    ++cases;
                    const AffineWeight mu = weight_of_basic(beta, i);
                    const bool translate = xi_action(beta, AffineWeight::fundamental(0, k)) == mu;
                    if (is_extremal(mu) != (i == 0) || translate != (i == 0))
                        return "extremal criterion fails at rank " + std::to_string(k) + ", " + to_string(mu);
                }
        return "";
    }));
    out.push_back(run_check("levelrank/dagger-bijection", [&](long& cases) -> std::string {
        const auto source = bounded_tuples(ell, m, 0, m);
        const auto target = bounded_tuples(m, ell, 0, ell);
        if (source.size() != target.size()) return "A(ell,m)_0 and A(m,ell)_0 have different sizes";
        std::set<std::vector<int>> images;
        for (const auto& lambda : source) {
            ++cases;
            const BoundedWeightTuple mu = dagger(lambda);
            mu.validate();
            if (mu.ell() != m || mu.d() != 0) return "dagger leaves A(m,ell)_0";
            if (!images.insert(mu.entries).second) return "dagger is not injective";
            if (dagger(mu) != lambda) return "dagger is not an involution";
        }
        return "";
    }));
    out.push_back(run_check("levelrank/cores-and-charges", [&](long& cases) -> std::string {
        for (int k : ranks())
            for (int n = 0; n <= std::max(N, 10); ++n)
                for (const auto& core : partitions_of(n)) {
                    if (!is_core(core, k)) continue;
                    ++cases;
                    const Charge s = tau_core_to_charge(core, k);
                    if (charge_to_core(s) != core) return "core/charge round trip fails on " + to_string(core);
                    int squares = 0;
                    for (int x : s.entries()) squares += x * x;
                    if (2 * zero_nodes(core, k) != squares) return "n_0 of " + to_string(core) + " is not half the charge norm";
                }
        return "";
    }));
    const bool trivial_charge = std::all_of(P.charge.entries().begin(), P.charge.entries().end(), [](int x) { return x == 0; });
    out.push_back(run_check("levelrank/case-one-identity", [&](long& cases) -> std::string {
        if (!trivial_charge) return "";
        for (int n = 0; n <= std::min(N, 5); ++n) {
            const GradedTable t = engine.graded_dims(n);
            for (int j = 0; j <= n; ++j) {
                ++cases;
                int column = 0;
                for (const auto& [ij, d] : t.entries)
                    if (ij.second == j) column += d;
                if (rhs_case1_dim(n, j, m, ell) != column)
                    return "level-one side differs at n=" + std::to_string(n) + ", j=" + std::to_string(j);
            }
        }
        return "";
    }));
}

}  // namespace

SymFunc kostka_power_product(int r, const Partition& lambda) {
    const int n = lambda.size() + r;
    std::map<std::pair<Partition, Composition>, Integer> memo;
    // Coefficient of x^mu in p_r s_lambda for dominant mu: one term per variable carrying x^r.
    std::map<Partition, Integer> monomial;
    for (const auto& mu : partitions_of(n)) {
        Integer c = 0;
        for (int i = 0; i < mu.length(); ++i) {
            if (mu.parts()[i] < r) continue;
            Composition rest = mu.parts();
            rest[i] -= r;
            std::erase(rest, 0);
            std::sort(rest.rbegin(), rest.rend());
            c += kostka(lambda, rest, memo);
        }
        if (c != 0) monomial[mu] = c;
    }
    // Peel Schur functions off in decreasing lexicographic order.
    auto shapes = partitions_of(n);
    std::sort(shapes.rbegin(), shapes.rend(), [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
    std::map<Partition, Integer> schur;
    for (const auto& mu : shapes) {
        Integer c = monomial.count(mu) ? monomial.at(mu) : Integer(0);
        for (const auto& [nu, a] : schur) c -= a * kostka(nu, mu.parts(), memo);
        if (c != 0) schur[mu] = c;
    }
    SymFunc out(Basis::Schur, n);
    for (const auto& [mu, c] : schur) out.add(mu, Rational(c));
    return out;
}

std::vector<CheckResult> run_invariant_suite(const FockSpaceParams& params, const NodeOrder& order) {
    params.validate();
    std::vector<CheckResult> out;
    partition_checks(params, out);
    symfunc_checks(params, out);
    fock_checks(params, out);
    GradingEngine engine(params);
    grading_checks(params, engine, out);
    crystal_checks(params, order, engine, out);
    levelrank_checks(params, engine, out);
    return out;
}

std::vector<CheckResult> run_invariant_suite(const FockSpaceParams& params, CrystalOrder order) {
    return run_invariant_suite(params, node_order(order));
}

}  // namespace fockforge
