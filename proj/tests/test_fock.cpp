#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fockforge/fock.hpp"
#include "oracles.hpp"

using namespace fockforge;

namespace {

FockSpaceParams space(int m, std::vector<int> s, int bound) {
    FockSpaceParams p;
    p.m = m;
    p.ell = static_cast<int>(s.size());
    p.charge = Charge(std::move(s));
    p.degree_bound = bound;
    return p;
}

FockVector ket(const FockSpaceParams& p, const char* text) { return FockVector::basis(p, parse_multipartition(text)); }

// b_r by ribbons: an mr-ribbon is added to each component in turn.
FockVector ribbon_b(int r, const FockVector& v) {
    FockVector out(v.params());
    const int len = v.params().m * r;
    for (const auto& [lambda, c] : v.coeffs())
        for (int p = 0; p < lambda.ell(); ++p)
            for (const auto& [mu, sign] : oracle::add_ribbons(lambda[p], len)) {
                const auto nu = lambda.with_component(p, mu);
                if (nu.size() <= v.params().degree_bound) out.add(nu, sign * c);
            }
    return out;
}

FockVector ribbon_b_dual(int r, const FockVector& v) {
    FockVector out(v.params());
    const int len = v.params().m * r;
    for (const auto& [lambda, c] : v.coeffs())
        for (int p = 0; p < lambda.ell(); ++p)
            for (const auto& [mu, sign] : oracle::remove_ribbons(lambda[p], len))
                out.add(lambda.with_component(p, mu), sign * c);
    return out;
}

FockVector random_vector(const FockSpaceParams& p, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    FockVector v(p);
    for (const auto& lambda : multipartitions_of(n, p.ell)) v.add(lambda, coeff(rng));
    return v;
}

}  // namespace

TEST_CASE("parameters are validated") {
    CHECK_NOTHROW(space(2, {0}, 3).validate());
    CHECK_THROWS_AS(space(1, {0}, 3).validate(), std::invalid_argument);
    CHECK_THROWS_AS(space(2, {0}, -1).validate(), std::invalid_argument);
    auto bad = space(2, {0, 0}, 3);
    bad.ell = 3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("Chevalley generators on basis vectors") {
    const auto p = space(2, {0}, 4);
    CHECK(apply_e(0, ket(p, "[1]")) == ket(p, "[]"));
    CHECK(apply_e(1, ket(p, "[1]")).is_zero());
    CHECK(apply_e(1, ket(p, "[2,1]")) == ket(p, "[2]") + ket(p, "[1,1]"));
    const auto p2 = space(2, {0, 0}, 4);
    CHECK(apply_f(0, ket(p2, "[]|[]")) == ket(p2, "[1]|[]") + ket(p2, "[]|[1]"));
    // f drops what exceeds the bound.
    CHECK(apply_f(0, ket(space(2, {0}, 0), "[]")).is_zero());
}

TEST_CASE("Chevalley relations and weight shifts") {
    for (const auto& p : {space(2, {0}, 5), space(3, {1, -1}, 4), space(2, {1, 0, -1}, 3)})
        for (int n = 0; n < p.degree_bound; ++n)
            for (const auto& lambda : multipartitions_of(n, p.ell)) {
                const auto v = FockVector::basis(p, lambda);
                const auto w = weight_of(lambda, p);
                for (int q = 0; q < p.m; ++q) {
                    for (int q2 = 0; q2 < p.m; ++q2) {
                        const auto lhs = apply_e(q, apply_f(q2, v)) - apply_f(q2, apply_e(q, v));
                        if (q != q2) {
                            CHECK(lhs.is_zero());
                            continue;
                        }
                        const auto ar = addable_removable(lambda, p.charge, p.m, q);
                        const int scalar = static_cast<int>(ar.addable.size()) - static_cast<int>(ar.removable.size());
                        CHECK(lhs == Rational(scalar) * v);
                    }
                    for (const auto& [mu, c] : apply_f(q, v).coeffs())
                        CHECK(weight_of(mu, p) == w - AffineWeight::simple_root(q, p.m));
                    for (const auto& [mu, c] : apply_e(q, v).coeffs())
                        CHECK(weight_of(mu, p) == w + AffineWeight::simple_root(q, p.m));
                }
            }
}

TEST_CASE("Heisenberg creation examples") {
    const auto p = space(2, {0}, 4);
    CHECK(apply_b(1, ket(p, "[]")) == ket(p, "[2]") - ket(p, "[1,1]"));
    CHECK(apply_b(1, FockVector(p)).is_zero());
    const auto p2 = space(2, {0, 0}, 4);
    CHECK(apply_b(1, ket(p2, "[]|[]")) ==
          ket(p2, "[2]|[]") - ket(p2, "[1,1]|[]") + ket(p2, "[]|[2]") - ket(p2, "[]|[1,1]"));
    CHECK(apply_b_dual(1, ket(p, "[2]")) == ket(p, "[]"));
    CHECK(apply_b_dual(1, ket(p, "[1,1]")) == Rational(-1) * ket(p, "[]"));
    CHECK(apply_b_dual(2, ket(p, "[2,1]")).is_zero());
}

TEST_CASE("Heisenberg operators against the ribbon oracle") {
    for (const auto& p : {space(2, {0}, 7), space(3, {0}, 7), space(2, {1, -1}, 6), space(3, {0, 0}, 6),
                          space(2, {0, 1, -1}, 5)})
        for (int n = 0; n <= p.degree_bound; ++n)
            for (const auto& lambda : multipartitions_of(n, p.ell)) {
                const auto v = FockVector::basis(p, lambda);
                for (int r = 1; p.m * r <= p.degree_bound; ++r) {
                    CHECK(apply_b(r, v) == ribbon_b(r, v));
                    CHECK(apply_b_dual(r, v) == ribbon_b_dual(r, v));
                }
            }
}

TEST_CASE("pairing and adjointness") {
    const auto p = space(2, {1, -1}, 6);
    CHECK(fock_pairing(ket(p, "[2]|[1]"), ket(p, "[2]|[1]")) == 1);
    CHECK(fock_pairing(ket(p, "[2]|[1]"), ket(p, "[1]|[2]")) == 0);
    CHECK_THROWS_AS(fock_pairing(ket(p, "[]|[]"), ket(space(2, {0, 0}, 6), "[]|[]")), std::invalid_argument);
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 4; ++trial)
        for (int r = 1; r <= 2; ++r)
            for (int n = 0; n + 2 * r <= 6; ++n) {
                const auto x = random_vector(p, n + 2 * r, rng), y = random_vector(p, n, rng);
                CHECK(fock_pairing(apply_b_dual(r, x), y) == fock_pairing(x, apply_b(r, y)));
                const auto z = random_vector(p, n, rng);
                CHECK(fock_pairing(Rational(3) * y - z, y) == 3 * fock_pairing(y, y) - fock_pairing(z, y));
            }
}

TEST_CASE("Heisenberg relations") {
    for (const auto& p : {space(2, {0}, 6), space(2, {1, -1}, 6), space(3, {0, 0}, 6)})
        for (int n = 0; n <= p.degree_bound; ++n)
            for (const auto& lambda : multipartitions_of(n, p.ell)) {
                const auto v = FockVector::basis(p, lambda);
                for (int r = 1; n + p.m * r <= p.degree_bound; ++r)
                    for (int t = 1; n + p.m * t <= p.degree_bound; ++t) {
                        const auto lhs = apply_b_dual(r, apply_b(t, v)) - apply_b(t, apply_b_dual(r, v));
                        CHECK(lhs == Rational(r == t ? r * p.m * p.ell : 0) * v);
                    }
            }
}

TEST_CASE("weights") {
    const auto p2 = space(2, {0, 0}, 3);
    CHECK(weight_of(parse_multipartition("[]|[]"), p2) == 2 * AffineWeight::fundamental(0, 2));
    const auto p = space(2, {0}, 3);
    CHECK(weight_of(parse_multipartition("[1]"), p) ==
          AffineWeight::fundamental(0, 2) - AffineWeight::simple_root(0, 2));
    for (int m = 2; m <= 3; ++m)
        for (const auto& lambda : multipartitions_of(4, 2)) {
            const auto w = weight_of(lambda, space(m, {0, 0}, 4));
            CHECK(w.delta == -nodes_with_residue(lambda, Charge({0, 0}), m)[0]);
        }
    CHECK(delta_shift(Charge({0, 0}), 2) == 0);
}

TEST_CASE("Casimir matrices") {
    const auto p = space(2, {0}, 4);
    CHECK(casimir_matrix(1, p).is_zero());
    const Matrix c = casimir_matrix(2, p);
    Matrix want(2, 2);
    want.at(0, 0) = ratio(1, 2);
    want.at(0, 1) = ratio(-1, 2);
    want.at(1, 0) = ratio(-1, 2);
    want.at(1, 1) = ratio(1, 2);
    CHECK(c == want);
    CHECK(apply_casimir(ket(p, "[2]")) == ratio(1, 2) * ket(p, "[2]") - ratio(1, 2) * ket(p, "[1,1]"));

    for (const auto& q : {space(2, {0}, 6), space(2, {1, -1}, 5), space(3, {0, 0}, 6)})
        for (int n = 0; n <= q.degree_bound; ++n) {
            const Matrix m = casimir_matrix(n, q);
            CHECK(m.is_symmetric());
            // trace equals (1/(m ell)) times the squared norms of the b_r columns
            Rational trace = 0, gram = 0;
            for (int i = 0; i < m.rows(); ++i) trace += m.at(i, i);
            for (int r = 1; q.m * r <= n; ++r) {
                auto wide = q;
                wide.degree_bound = n;
                const Matrix b = b_matrix(r, n - q.m * r, wide);
                for (int i = 0; i < b.rows(); ++i)
                    for (int k = 0; k < b.cols(); ++k) gram += b.at(i, k) * b.at(i, k);
            }
            CHECK(trace == gram / (q.m * q.ell));
            // integer spectrum exhausting the block
            int found = 0;
            for (int j = 0; j <= n / q.m; ++j) {
                Matrix shifted = m;
                for (int i = 0; i < m.rows(); ++i) shifted.at(i, i) -= j;
                found += oracle::nullity(shifted);
            }
            CHECK(found == m.rows());
        }
}

TEST_CASE("level-one m-th Casimir") {
    CHECK(casimir_m_matrix_level1(3, 2, 2).is_zero());
    for (int m = 2; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n) CHECK(casimir_m_matrix_level1(n, m, 1) == casimir_matrix(n, space(m, {0}, n)));
    for (int ell = 2; ell <= 3; ++ell)
        for (int m = 2; m <= 3; ++m)
            for (int n = 0; n <= 8; ++n) {
                const Matrix c = casimir_m_matrix_level1(n, m, ell);
                CHECK(c.is_symmetric());
                int found = 0;
                for (int j = 0; j * m * ell <= n; ++j) {
                    Matrix shifted = c;
                    for (int i = 0; i < c.rows(); ++i) shifted.at(i, i) -= j;
                    found += oracle::nullity(shifted);
                }
                CHECK(found == c.rows());
            }
}

TEST_CASE("vector arithmetic, text and parsing") {
    const auto p = space(2, {0}, 3);
    FockVector v(p);
    CHECK_THROWS_AS(v.add(parse_multipartition("[2,2]"), 1), std::domain_error);
    CHECK_THROWS_AS(v += FockVector(space(2, {0}, 4)), std::invalid_argument);
    const auto w = ket(p, "[2]") - ratio(1, 2) * ket(p, "[1,1]");
    CHECK(to_string(w) == "[2] - 1/2 [1,1]");
    CHECK(parse_fock_vector(to_string(w), p) == w);
    CHECK(to_string(FockVector(p)) == "0");
    CHECK(parse_fock_vector("0", p).is_zero());
    CHECK(parse_fock_vector("-[1]", p) == Rational(-1) * ket(p, "[1]"));
    CHECK(parse_fock_vector("2 [1] + 3/4 [1]", p) == ratio(11, 4) * ket(p, "[1]"));
    CHECK_THROWS_AS(parse_fock_vector("[1]|[]", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_fock_vector("[1,2]", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_fock_vector("[1] +", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_fock_vector("1/0 [1]", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_fock_vector("[4]", p), std::domain_error);
    const auto j = to_json(w);
    CHECK(j["[2]"] == "1");
    CHECK(j["[1,1]"] == "-1/2");
}
