#include "fockforge/grading.hpp"

#include <algorithm>
#include <sstream>
#include <mutex>

#include "fockforge/parallel.hpp"
#include "fockforge/symfunc.hpp"

namespace fockforge {

int GradedTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int GradedTable::total() const {
    int sum = 0;
    for (const auto& [ij, d] : entries) sum += d;
    return sum;
}

nlohmann::ordered_json to_json(const GradedTable& t) {
    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (const auto& [ij, d] : t.entries) dims.push_back({ij.first, ij.second, d});
    return {{"n", t.n}, {"dims", dims}};
}

std::string to_csv(const GradedTable& t) {
    std::ostringstream out;
    for (const auto& [ij, d] : t.entries) out << t.n << ',' << ij.first << ',' << ij.second << ',' << d << '\n';
    return out.str();
}

bool filtration_leq(int i1, int j1, int i, int j, int m) { return i - i1 >= std::max(0, (j1 - j) * m); }

int cumulative_dim(const GradedTable& t, int i, int j, int m) {
    int sum = 0;
    for (const auto& [ij, d] : t.entries)
        if (filtration_leq(ij.first, ij.second, i, j, m)) sum += d;
    return sum;
}

long long partition_count(int k) {
    if (k < 0) return 0;
    std::vector<long long> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int t = part; t <= k; ++t) p[t] += p[t - part];
    return p[k];
}

namespace {

using Sparse = std::vector<std::pair<int, Rational>>;
using Key = std::vector<int>;

Key m_core_key(const Multipartition& lambda, int m) {
    Key key;
    for (const auto& part : lambda.components()) {
        const Partition core = core_quotient(part, m).core;
        key.push_back(static_cast<int>(core.parts().size()));
        key.insert(key.end(), core.parts().begin(), core.parts().end());
    }
    return key;
}

struct Block {
    Key weight;
    std::vector<int> members;  // layer indices
    std::vector<Vector> hw;
    std::vector<Vector> singular;
    std::map<int, std::vector<Vector>> eigen;  // eigenvalue -> basis
    std::map<int, std::vector<Vector>> hw_by_eigen;
    std::vector<std::map<int, std::vector<Vector>>> depth;  // depth -> eigenvalue -> basis
    std::map<std::pair<int, int>, int> table;
};

// Scales v to a primitive integer vector.
void make_primitive(Vector& v) {
    Integer den = 1, num = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
    if (num == 0) return;
    const Rational factor(den, num);
    for (auto& x : v)
        if (x != 0) x *= factor;
}

// Basis of the common kernel of a family of operators on span(vectors).
// ops(g) lists the sparse images of basis element g under each operator.
template <class Ops>
std::vector<Vector> joint_kernel(const std::vector<Vector>& vectors, const std::vector<int>& members, Ops ops) {
    if (vectors.empty()) return {};
    std::vector<std::map<std::pair<int, int>, Rational>> images(vectors.size());
    std::map<std::pair<int, int>, int> row_of;  // (operator, target) -> row
    for (std::size_t col = 0; col < vectors.size(); ++col) {
        const Vector& v = vectors[col];
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] == 0) continue;
            const auto per_op = ops(members[k]);
            for (std::size_t op = 0; op < per_op.size(); ++op)
                for (const auto& [target, c] : *per_op[op]) images[col][{static_cast<int>(op), target}] += v[k] * c;
        }
        for (const auto& [key, c] : images[col])
            if (c != 0) row_of.try_emplace(key, 0);
    }
    int next = 0;
    for (auto& [key, row] : row_of) row = next++;
    Matrix a(next, static_cast<int>(vectors.size()));
    for (std::size_t col = 0; col < vectors.size(); ++col)
        for (const auto& [key, c] : images[col])
            if (c != 0) a.at(row_of.at(key), static_cast<int>(col)) = c;
    std::vector<Vector> out;
    for (const Vector& x : nullspace(a)) {
        Vector combo(vectors[0].size());
        for (std::size_t col = 0; col < x.size(); ++col)
            if (x[col] != 0)
                for (std::size_t k = 0; k < combo.size(); ++k)
                    if (vectors[col][k] != 0) combo[k] += x[col] * vectors[col][k];
        make_primitive(combo);
        out.push_back(std::move(combo));
    }
    return out;
}

// Eigenspaces of the Casimir on one class of multipartitions sharing their
// tuple of component m-cores. b_r, b'_r and the Casimir preserve these
// classes and ignore the charge, so classes are shared by all engines with
// the same (ell, m).
struct CoreClass {
    std::vector<int> members;                  // layer indices
    std::map<int, std::vector<Vector>> eigen;  // eigenvalue -> basis, class coordinates
};

struct CasimirLayer {
    std::vector<Multipartition> basis;
    std::map<Multipartition, int> index;
    std::vector<int> class_of;
    std::vector<int> local_of;
    std::vector<CoreClass> classes;
    std::map<Key, int> class_by_key;
    std::vector<std::vector<Sparse>> b;      // b[r-1][k]: b_r of basis k of degree n-mr, into this layer
    std::vector<std::vector<Sparse>> bdual;  // bdual[r-1][k]: b'_r of basis k, into degree n-mr
    std::vector<std::map<int, Rational>> casimir;
};

using CasimirLayers = std::vector<std::unique_ptr<CasimirLayer>>;

std::mutex casimir_mutex;
std::map<std::pair<int, int>, CasimirLayers> casimir_cache;

std::unique_ptr<CasimirLayer> build_casimir_layer(int ell, int m, int n, const CasimirLayers& below) {
    auto lay = std::make_unique<CasimirLayer>();
    CasimirLayer& L = *lay;
    L.basis = multipartitions_of(n, ell);
    const int size = static_cast<int>(L.basis.size());
    L.class_of.resize(size);
    L.local_of.resize(size);
    std::vector<Key> keys(size);
    for (int k = 0; k < size; ++k) {
        L.index.emplace(L.basis[k], k);
        keys[k] = m_core_key(L.basis[k], m);
        auto [it, inserted] = L.class_by_key.try_emplace(keys[k], static_cast<int>(L.classes.size()));
        if (inserted) L.classes.emplace_back();
        L.class_of[k] = it->second;
        L.local_of[k] = static_cast<int>(L.classes[it->second].members.size());
        L.classes[it->second].members.push_back(k);
    }

    const FockSpaceParams local{m, ell, Charge(std::vector<int>(static_cast<std::size_t>(ell), 0)), n};
    L.casimir.assign(size, {});
    const Rational scale(1, m * ell);
    for (int r = 1; m * r <= n; ++r) {
        const CasimirLayer& src = *below[n - m * r];
        std::vector<Sparse> columns(src.basis.size());
        parallel_for(src.basis.size(), [&](std::size_t k) {
            for (const auto& [mu, c] : apply_b(r, FockVector::basis(local, src.basis[k])).coeffs())
                columns[k].emplace_back(L.index.at(mu), c);
        });
        std::vector<Sparse> dual(size);
        for (std::size_t k = 0; k < columns.size(); ++k)
            for (const auto& [a, ca] : columns[k]) {
                if (keys[a] != m_core_key(src.basis[k], m))
                    throw InvariantFailure("b_" + std::to_string(r) + " changes a component m-core in degree " +
                                           std::to_string(n));
                dual[a].emplace_back(static_cast<int>(k), ca);
                for (const auto& [b, cb] : columns[k]) L.casimir[a][b] += scale * ca * cb;
            }
        L.b.push_back(std::move(columns));
        L.bdual.push_back(std::move(dual));
    }
    for (auto& row : L.casimir) std::erase_if(row, [](const auto& kv) { return kv.second == 0; });

    parallel_for(L.classes.size(), [&](std::size_t ci) {
        CoreClass& C = L.classes[ci];
        const int dim = static_cast<int>(C.members.size());
        const Key& key = keys[C.members[0]];

        // E_0 = ker b' and E_j = sum_r b_r E_{j-r}(n - mr). Each basis vector is
        // then checked against the Casimir; together with completeness this
        // identifies every span with the full kernel of (Casimir - j).
        std::vector<Vector> unit;
        for (int a = 0; a < dim; ++a) {
            Vector v(static_cast<std::size_t>(dim));
            v[a] = 1;
            unit.push_back(std::move(v));
        }
        auto kernel = joint_kernel(unit, C.members, [&](int g) {
            std::vector<const Sparse*> ops;
            for (const auto& d : L.bdual) ops.push_back(&d[g]);
            return ops;
        });
        if (!kernel.empty()) C.eigen[0] = std::move(kernel);
        for (int j = 1; j * m <= n; ++j) {
            EchelonBasis span(dim);
            for (int r = 1; r <= j; ++r) {
                const CasimirLayer& src = *below[n - m * r];
                auto it = src.class_by_key.find(key);
                if (it == src.class_by_key.end()) continue;
                const CoreClass& S = src.classes[it->second];
                auto ej = S.eigen.find(j - r);
                if (ej == S.eigen.end()) continue;
                for (const Vector& v : ej->second) {
                    Vector image(static_cast<std::size_t>(dim));
                    for (std::size_t k = 0; k < v.size(); ++k) {
                        if (v[k] == 0) continue;
                        for (const auto& [target, c] : L.b[r - 1][S.members[k]]) image[L.local_of[target]] += v[k] * c;
                    }
                    span.insert(std::move(image));
                }
            }
            if (span.rank() > 0) C.eigen[j] = span.rows();
        }
        int found = 0;
        for (auto& [j, vectors] : C.eigen)
            for (Vector& v : vectors) {
                make_primitive(v);
                // The Casimir rows are symmetric by construction, so rows serve as columns.
                Vector image(static_cast<std::size_t>(dim));
                for (int k = 0; k < dim; ++k) {
                    if (v[k] == 0) continue;
                    for (const auto& [g, c] : L.casimir[C.members[k]]) {
                        if (L.class_of[g] != static_cast<int>(ci))
                            throw InvariantFailure("Casimir changes a component m-core in degree " + std::to_string(n));
                        image[L.local_of[g]] += c * v[k];
                    }
                }
                for (int a = 0; a < dim; ++a)
                    if (image[a] != j * v[a])
                        throw InvariantFailure("Casimir eigenvector check failed for eigenvalue " + std::to_string(j) +
                                               " in degree " + std::to_string(n));
                ++found;
            }
        if (found != dim)
            throw InvariantFailure("Casimir eigenspaces in degree " + std::to_string(n) + " span " +
                                   std::to_string(found) + " of " + std::to_string(dim) + " dimensions");
    });
    return lay;
}

const CasimirLayer& casimir_layer(int ell, int m, int n) {
    std::lock_guard<std::mutex> lock(casimir_mutex);
    CasimirLayers& layers = casimir_cache[{ell, m}];
    while (static_cast<int>(layers.size()) <= n)
        layers.push_back(build_casimir_layer(ell, m, static_cast<int>(layers.size()), layers));
    return *layers[n];
}

}  // namespace

void clear_grading_cache() {
    std::lock_guard<std::mutex> lock(casimir_mutex);
    casimir_cache.clear();
}

struct GradingEngine::Layer {
    int n = 0;
    const CasimirLayer* shared = nullptr;
    std::vector<int> block_of;
    std::vector<int> local_of;
    std::vector<Block> blocks;
    std::map<Key, int> block_by_weight;
    std::vector<std::vector<Sparse>> e;  // e[q][k]: e_q of basis k, into degree n-1
    std::vector<std::vector<Sparse>> f;  // f[q][k]: f_q of basis k, into degree n+1 (filled by the next layer)

    const std::vector<Multipartition>& basis() const { return shared->basis; }

    FockVector to_fock(const Block& b, const Vector& v, const FockSpaceParams& params) const {
        FockVector out(params);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) out.add(basis()[b.members[k]], v[k]);
        return out;
    }
};

GradingEngine::GradingEngine(FockSpaceParams params) : params_(std::move(params)) { params_.validate(); }

GradingEngine::~GradingEngine() = default;

const GradingEngine::Layer& GradingEngine::layer(int n) {
    if (n < 0 || n > max_degree())
        throw std::out_of_range("degree " + std::to_string(n) + " outside 0.." + std::to_string(max_degree()));
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(layers_.size()) <= n) build_layer(static_cast<int>(layers_.size()));
    return *layers_[n];
}

void GradingEngine::build_layer(int n) {
    const int m = params_.m, ell = params_.ell;
    FockSpaceParams local = params_;
    local.degree_bound = std::max(n, 0);
    auto lay = std::make_unique<Layer>();
    Layer& L = *lay;
    L.n = n;
    L.shared = &casimir_layer(ell, m, n);
    const CasimirLayer& C = *L.shared;
    const int size = static_cast<int>(C.basis.size());
    L.block_of.resize(size);
    L.local_of.resize(size);
    for (int k = 0; k < size; ++k) {
        Key w = nodes_with_residue(C.basis[k], params_.charge, m);
        auto [it, inserted] = L.block_by_weight.try_emplace(w, static_cast<int>(L.blocks.size()));
        if (inserted) L.blocks.emplace_back().weight = w;
        Block& b = L.blocks[it->second];
        L.block_of[k] = it->second;
        L.local_of[k] = static_cast<int>(b.members.size());
        b.members.push_back(k);
    }

    // e_q into degree n-1 and f_q from degree n-1.
    L.e.assign(m, std::vector<Sparse>(size));
    L.f.assign(m, {});
    Layer* prev = n > 0 ? layers_[n - 1].get() : nullptr;
    for (int q = 0; q < m; ++q) {
        for (int k = 0; k < size && prev; ++k)
            for (const auto& [mu, c] : apply_e(q, FockVector::basis(local, C.basis[k])).coeffs())
                L.e[q][k].emplace_back(prev->shared->index.at(mu), c);
        if (prev) {
            prev->f[q].assign(prev->basis().size(), {});
            for (std::size_t k = 0; k < prev->basis().size(); ++k)
                for (const auto& [mu, c] : apply_f(q, FockVector::basis(local, prev->basis()[k])).coeffs())
                    prev->f[q][k].emplace_back(C.index.at(mu), c);
        }
    }

    // Core classes refine the weight blocks; their eigenvectors are copied into
    // block coordinates.
    for (const CoreClass& K : C.classes) {
        const int bi = L.block_of[K.members[0]];
        Block& B = L.blocks[bi];
        for (int g : K.members)
            if (L.block_of[g] != bi)
                throw InvariantFailure("a component m-core class meets two weight blocks in degree " +
                                       std::to_string(n));
        for (const auto& [j, vectors] : K.eigen)
            for (const Vector& v : vectors) {
                Vector w(B.members.size());
                for (std::size_t k = 0; k < v.size(); ++k) w[L.local_of[K.members[k]]] = v[k];
                B.eigen[j].push_back(std::move(w));
            }
    }

    parallel_for(L.blocks.size(), [&](std::size_t bi) {
        Block& B = L.blocks[bi];
        const int dim = static_cast<int>(B.members.size());
        auto ops_e = [&](int g) {
            std::vector<const Sparse*> ops;
            for (int q = 0; q < m; ++q) ops.push_back(&L.e[q][g]);
            return ops;
        };

        for (const auto& [j, e] : B.eigen) {
            std::vector<Vector>& hw = B.hw_by_eigen[j];
            hw = n == 0 ? e : joint_kernel(e, B.members, ops_e);
            B.hw.insert(B.hw.end(), hw.begin(), hw.end());
        }
        // Joint kernel of the e_q and the b'_r: the e-kernel inside ker b' = E_0.
        if (auto it = B.hw_by_eigen.find(0); it != B.hw_by_eigen.end()) B.singular = it->second;

        // D(n,0,j) = hw(n) cap E_j and D(n,i,j) = sum_q f_q D(n-1,i-1,j).
        B.depth.assign(static_cast<std::size_t>(n) + 1, {});
        for (const auto& [j, hw] : B.hw_by_eigen) B.depth[0][j] = hw;
        for (int i = 1; i <= n; ++i) {
            std::map<int, EchelonBasis> spans;
            for (int q = 0; q < m; ++q) {
                Key source = B.weight;
                if (--source[q] < 0) continue;
                auto it = prev->block_by_weight.find(source);
                if (it == prev->block_by_weight.end()) continue;
                const Block& S = prev->blocks[it->second];
                if (static_cast<int>(S.depth.size()) <= i - 1) continue;
                for (const auto& [j, vectors] : S.depth[i - 1]) {
                    EchelonBasis& span = spans.try_emplace(j, dim).first->second;
                    for (const Vector& v : vectors) {
                        Vector image(static_cast<std::size_t>(dim));
                        for (std::size_t k = 0; k < v.size(); ++k) {
                            if (v[k] == 0) continue;
                            for (const auto& [target, c] : prev->f[q][S.members[k]]) {
                                if (L.block_of[target] != static_cast<int>(bi))
                                    throw InvariantFailure("f_q left its weight block in degree " + std::to_string(n));
                                image[L.local_of[target]] += v[k] * c;
                            }
                        }
                        span.insert(std::move(image));
                    }
                }
            }
            for (auto& [j, span] : spans)
                if (span.rank() > 0) B.depth[i][j] = span.rows();
        }
        int total = 0;
        for (int i = 0; i <= n; ++i)
            for (const auto& [j, vectors] : B.depth[i]) {
                const int d = static_cast<int>(vectors.size());
                if (d == 0) continue;
                B.table[{i, j}] = d;
                total += d;
            }
        if (total != dim)
            throw InvariantFailure("depth spaces in degree " + std::to_string(n) + " span " + std::to_string(total) +
                                   " of " + std::to_string(dim) + " dimensions");
    });
    layers_.push_back(std::move(lay));
}

Subspace GradingEngine::highest_weight_space(int n) {
    const Layer& L = layer(n);
    Subspace out;
    out.degree = n;
    for (const Block& b : L.blocks)
        for (const Vector& v : b.hw) out.basis.push_back(L.to_fock(b, v, params_));
    return out;
}

Subspace GradingEngine::singular_space(int n) {
    const Layer& L = layer(n);
    Subspace out;
    out.degree = n;
    for (const Block& b : L.blocks)
        for (const Vector& v : b.singular) out.basis.push_back(L.to_fock(b, v, params_));
    return out;
}

Subspace GradingEngine::casimir_eigenspace(int n, int j) {
    if (j < 0) throw std::invalid_argument("eigenvalue must be nonnegative");
    const Layer& L = layer(n);
    Subspace out;
    out.degree = n;
    for (const Block& b : L.blocks)
        if (auto it = b.eigen.find(j); it != b.eigen.end())
            for (const Vector& v : it->second) out.basis.push_back(L.to_fock(b, v, params_));
    return out;
}

Subspace GradingEngine::depth_space(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("depth must lie in 0..n");
    const Layer& L = layer(n);
    Subspace out;
    out.degree = n;
    for (const Block& b : L.blocks)
        for (const auto& [j, vectors] : b.depth[i])
            for (const Vector& v : vectors) out.basis.push_back(L.to_fock(b, v, params_));
    return out;
}

GradedTable GradingEngine::graded_dims(int n) {
    const Layer& L = layer(n);
    GradedTable t;
    t.n = n;
    for (const Block& b : L.blocks)
        for (const auto& [ij, d] : b.table) t.entries[ij] += d;
    if (t.total() != static_cast<int>(L.basis().size()))
        throw InvariantFailure("graded table of degree " + std::to_string(n) + " does not exhaust the space");
    return t;
}

std::vector<long long> GradingEngine::findim_counts(int bound) {
    const int m = params_.m;
    std::vector<long long> h;
    for (int n = 0; n <= bound; ++n) {
        long long k = 0;
        for (const Block& b : layer(n).blocks) k += static_cast<long long>(b.hw.size());
        for (int r = 1; m * r <= n; ++r) k -= partition_count(r) * h[n - m * r];
        if (k < 0) throw InvariantFailure("negative finite-dimensional count h_" + std::to_string(n));
        h.push_back(k);
    }
    return h;
}

bool GradingEngine::isom1_check(int n, int j) {
    const Layer& L = layer(n);
    int lhs = 0;
    for (const Block& b : L.blocks)
        if (auto it = b.hw_by_eigen.find(j); it != b.hw_by_eigen.end()) lhs += static_cast<int>(it->second.size());
    long long rhs = 0;
    if (n - params_.m * j >= 0) rhs = partition_count(j) * findim_counts(n - params_.m * j).back();
    return lhs == rhs;
}

}  // namespace fockforge
