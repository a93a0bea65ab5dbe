#pragma once

// The bigrading of the charged Fock space: depth i under the sl_m action and
// Casimir eigenvalue j. Everything is exact and organised per sl_m weight block,
// since e_q, f_q, b_r, b'_r and the Casimir are all weight-homogeneous.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fockforge/errors.hpp"
#include "fockforge/fock.hpp"
#include "fockforge/linalg.hpp"

namespace fockforge {

struct Subspace {
    int degree = 0;
    std::vector<FockVector> basis;  // linearly independent
    int dim() const { return static_cast<int>(basis.size()); }
};

struct GradedTable {
    int n = 0;
    std::map<std::pair<int, int>, int> entries;  // (i, j) -> dimension, zeros omitted

    int at(int i, int j) const;
    int total() const;
};

nlohmann::ordered_json to_json(const GradedTable& t);
// Rows "n,i,j,dim" without a header.
std::string to_csv(const GradedTable& t);

// (i', j') <= (i, j) in the filtration order: i - i' >= max(0, (j' - j) m).
bool filtration_leq(int i1, int j1, int i, int j, int m);
// Sum of the entries at or below (i, j).
int cumulative_dim(const GradedTable& t, int i, int j, int m);

// Number of partitions of k, as a machine integer (k is small here).
long long partition_count(int k);

// Casimir eigenspaces depend only on (ell, m) and are cached across engines.
// Dropping the cache frees memory and forces the next engine to rebuild.
void clear_grading_cache();

class GradingEngine {
public:
    // Covers degrees 0..params.degree_bound.
    explicit GradingEngine(FockSpaceParams params);
    ~GradingEngine();
    GradingEngine(const GradingEngine&) = delete;
    GradingEngine& operator=(const GradingEngine&) = delete;

    const FockSpaceParams& params() const { return params_; }
    int max_degree() const { return params_.degree_bound; }

    Subspace highest_weight_space(int n);
    Subspace singular_space(int n);
    Subspace casimir_eigenspace(int n, int j);
    Subspace depth_space(int n, int i);
    GradedTable graded_dims(int n);
    // h_0..h_bound from K(t) / sum_r p(r) t^{mr}, K_n = dim highest_weight_space(n).
    // Throws InvariantFailure on a negative coefficient.
    std::vector<long long> findim_counts(int bound);
    std::vector<long long> findim_counts() { return findim_counts(max_degree()); }
    // dim(hw(n) cap E_j) == p(j) h_{n - mj}.
    bool isom1_check(int n, int j);

    struct Layer;

private:
    const Layer& layer(int n);
    void build_layer(int n);

    FockSpaceParams params_;
    std::mutex mutex_;
    std::vector<std::unique_ptr<Layer>> layers_;
};

}  // namespace fockforge
