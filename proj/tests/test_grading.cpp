#include <doctest.h>

#include <stdexcept>

#include "fockforge/grading.hpp"
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

// Rows of `a` stacked from operator images: one row per (operator, target basis
// vector), one column per degree-n basis vector.
Matrix stacked(const FockSpaceParams& p, int n, bool with_dual) {
    const auto basis = multipartitions_of(n, p.ell);
    std::vector<std::vector<FockVector>> columns;
    for (const auto& lambda : basis) {
        std::vector<FockVector> images;
        const auto v = FockVector::basis(p, lambda);
        for (int q = 0; q < p.m; ++q) images.push_back(apply_e(q, v));
        if (with_dual)
            for (int r = 1; p.m * r <= n; ++r) images.push_back(apply_b_dual(r, v));
        columns.push_back(std::move(images));
    }
    std::vector<std::pair<int, Multipartition>> rows;
    std::map<std::pair<int, Multipartition>, int> row_of;
    for (const auto& images : columns)
        for (int k = 0; k < static_cast<int>(images.size()); ++k)
            for (const auto& [mu, c] : images[k].coeffs())
                if (row_of.emplace(std::pair{k, mu}, static_cast<int>(rows.size())).second) rows.push_back({k, mu});
    Matrix a(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(columns.size()); ++col)
        for (int k = 0; k < static_cast<int>(columns[col].size()); ++k)
            for (const auto& [mu, c] : columns[col][k].coeffs()) a.at(row_of.at({k, mu}), col) = c;
    return a;
}

// Coordinates of a subspace basis, as rows of a matrix over the degree-n basis.
Matrix rows_of(const Subspace& s, const FockSpaceParams& p, int n) {
    const auto basis = multipartitions_of(n, p.ell);
    Matrix a(s.dim(), static_cast<int>(basis.size()));
    for (int i = 0; i < s.dim(); ++i)
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) a.at(i, k) = s.basis[i].coeff(basis[k]);
    return a;
}

int rank_of(const Matrix& a) { return a.cols() - oracle::nullity(a); }

int intersection_dim(const Subspace& u, const Subspace& w, const FockSpaceParams& p, int n) {
    const Matrix a = rows_of(u, p, n), b = rows_of(w, p, n);
    Matrix both(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) both.at(i, k) = a.at(i, k);
    for (int i = 0; i < b.rows(); ++i)
        for (int k = 0; k < b.cols(); ++k) both.at(a.rows() + i, k) = b.at(i, k);
    return u.dim() + w.dim() - rank_of(both);
}

}  // namespace

TEST_CASE("worked level-one example") {
    clear_grading_cache();
    const auto p = space(2, {0}, 4);
    GradingEngine engine(p);
    CHECK(engine.highest_weight_space(0).dim() == 1);
    CHECK(engine.highest_weight_space(1).dim() == 0);
    const auto hw2 = engine.highest_weight_space(2);
    REQUIRE(hw2.dim() == 1);
    const auto& v = hw2.basis[0];
    const auto two = parse_multipartition("[2]"), pair = parse_multipartition("[1,1]");
    CHECK(v.coeff(two) != 0);
    CHECK(v.coeff(pair) == -v.coeff(two));
    CHECK(engine.singular_space(0).dim() == 1);
    CHECK(engine.singular_space(1).dim() == 0);
    CHECK(engine.singular_space(2).dim() == 0);
    CHECK(engine.casimir_eigenspace(2, 1).dim() == 1);
    CHECK(engine.casimir_eigenspace(2, 0).dim() == 1);
    CHECK(engine.casimir_eigenspace(2, 2).dim() == 0);
    CHECK(engine.casimir_eigenspace(3, 5).dim() == 0);
    const auto d = engine.depth_space(1, 1);
    REQUIRE(d.dim() == 1);
    CHECK(d.basis[0].coeffs().size() == 1);
    CHECK(d.basis[0].coeff(parse_multipartition("[1]")) != 0);

    CHECK(engine.graded_dims(0).entries == std::map<std::pair<int, int>, int>{{{0, 0}, 1}});
    CHECK(engine.graded_dims(2).entries == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{2, 0}, 1}});
    const auto h = engine.findim_counts(2);
    CHECK(h == std::vector<long long>{1, 0, 0});

    CHECK_THROWS_AS(engine.graded_dims(5), std::out_of_range);
    CHECK_THROWS_AS(engine.casimir_eigenspace(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(engine.depth_space(2, 3), std::invalid_argument);
}

TEST_CASE("subspaces against dense kernels and intersections") {
    for (const auto& p : {space(2, {0}, 6), space(3, {0}, 6), space(2, {1, -1}, 5), space(2, {0, 0}, 5),
                          space(3, {1, -1}, 4), space(2, {1, 0, -1}, 4)}) {
        GradingEngine engine(p);
        for (int n = 0; n <= p.degree_bound; ++n) {
            const int size = static_cast<int>(count_multipartitions(n, p.ell).get_si());
            const int hw = engine.highest_weight_space(n).dim();
            CHECK(hw == (n == 0 ? 1 : oracle::nullity(stacked(p, n, false))));
            CHECK(engine.singular_space(n).dim() == (n == 0 ? 1 : oracle::nullity(stacked(p, n, true))));

            const Matrix c = casimir_matrix(n, p);
            int eigen_total = 0, depth_total = 0;
            for (int j = 0; j <= n; ++j) {
                Matrix shifted = c;
                for (int i = 0; i < c.rows(); ++i) shifted.at(i, i) -= j;
                const int dim = engine.casimir_eigenspace(n, j).dim();
                CHECK(dim == oracle::nullity(shifted));
                if (p.m * j > n) CHECK(dim == 0);
                eigen_total += dim;
            }
            CHECK(eigen_total == size);

            const GradedTable t = engine.graded_dims(n);
            CHECK(t.total() == size);
            for (int i = 0; i <= n; ++i) {
                const auto depth = engine.depth_space(n, i);
                depth_total += depth.dim();
                int row = 0;
                for (int j = 0; j <= n; ++j) {
                    const int entry = t.at(i, j);
                    row += entry;
                    if (entry > 0) CHECK(i + p.m * j <= n);
                    if (n <= 4) CHECK(entry == intersection_dim(depth, engine.casimir_eigenspace(n, j), p, n));
                }
                CHECK(row == depth.dim());
            }
            CHECK(depth_total == size);
            CHECK(engine.depth_space(n, 0).dim() == hw);
            for (int j = 0; j <= n; ++j) {
                int col = 0;
                for (int i = 0; i <= n; ++i) col += t.at(i, j);
                CHECK(col == engine.casimir_eigenspace(n, j).dim());
            }
        }
    }
}

TEST_CASE("finite-dimensional counts") {
    for (const auto& p : {space(2, {0}, 8), space(3, {0}, 8), space(2, {1, -1}, 7), space(3, {1, 0, -1}, 5)}) {
        GradingEngine engine(p);
        const auto h = engine.findim_counts();
        CHECK(h[0] == 1);
        // K(t) = h(t) * sum_r p(r) t^{mr}
        for (int n = 0; n <= p.degree_bound; ++n) {
            long long k = 0;
            for (int r = 0; p.m * r <= n; ++r) k += partition_count(r) * h[n - p.m * r];
            CHECK(k == engine.highest_weight_space(n).dim());
            CHECK(h[n] == engine.singular_space(n).dim());
            for (int j = 0; p.m * j <= n + p.m; ++j) CHECK(engine.isom1_check(n, j));
        }
    }
}

TEST_CASE("depth spaces are stable under f") {
    const auto p = space(2, {1, -1}, 5);
    GradingEngine engine(p);
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) {
            const auto target = engine.depth_space(n, i);
            const int base = target.dim();
            for (const auto& v : engine.depth_space(n - 1, i - 1).basis)
                for (int q = 0; q < p.m; ++q) {
                    Subspace grown = target;
                    grown.basis.push_back(apply_f(q, v));
                    CHECK(rank_of(rows_of(grown, p, n)) == base);
                }
        }
}

TEST_CASE("table helpers") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(10) == 42);
    CHECK(filtration_leq(0, 1, 2, 0, 2));
    CHECK_FALSE(filtration_leq(2, 0, 0, 1, 2));
    CHECK(filtration_leq(1, 1, 1, 1, 3));
    GradedTable t;
    t.n = 4;
    t.entries = {{{0, 2}, 2}, {{2, 1}, 1}, {{4, 0}, 2}};
    CHECK(t.at(2, 1) == 1);
    CHECK(t.at(1, 1) == 0);
    CHECK(t.total() == 5);
    CHECK(cumulative_dim(t, 4, 0, 2) == 5);
    CHECK(cumulative_dim(t, 0, 2, 2) == 2);
    CHECK(to_csv(t) == "4,0,2,2\n4,2,1,1\n4,4,0,2\n");
    CHECK(to_json(t).dump() == R"({"n":4,"dims":[[0,2,2],[2,1,1],[4,0,2]]})");
}
