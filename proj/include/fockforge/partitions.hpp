#pragma once

// Partitions, multipartitions, charges, contents, residues, cores and quotients.
//
// Conventions:
//   * nodes (i, j) are 1-based row/column coordinates; content is j - i;
//   * multipartition components are indexed by p in Z_ell, stored 0-based;
//   * a node of component p is a q-node (for a charge s and modulus m) when
//     s_p + j - i == q mod m.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fockforge/rational.hpp"

namespace fockforge {

class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // Row length, 0 beyond the last row (rows are 1-based).
    int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(int ell);
    explicit Multipartition(std::vector<Partition> components);

    int ell() const { return static_cast<int>(components_.size()); }
    const Partition& operator[](int p) const { return components_[p]; }
    const std::vector<Partition>& components() const { return components_; }
    int size() const;

    Multipartition with_component(int p, Partition part) const;

    auto operator<=>(const Multipartition&) const = default;
    bool operator==(const Multipartition&) const = default;

private:
    std::vector<Partition> components_;
};

class Charge {
public:
    Charge() = default;
    explicit Charge(std::vector<int> entries) : entries_(std::move(entries)) {}

    int ell() const { return static_cast<int>(entries_.size()); }
    int operator[](int p) const { return entries_[p]; }
    const std::vector<int>& entries() const { return entries_; }
    int weight() const;

    auto operator<=>(const Charge&) const = default;
    bool operator==(const Charge&) const = default;

private:
    std::vector<int> entries_;
};

struct CoreQuotient {
    Partition core;
    Multipartition quotient;
    bool operator==(const CoreQuotient&) const = default;
};

struct Node {
    int component = 0;  // 0-based
    int row = 1;        // 1-based
    int col = 1;        // 1-based
    int content() const { return col - row; }
    auto operator<=>(const Node&) const = default;
    bool operator==(const Node&) const = default;
};

struct AddableRemovable {
    std::vector<Node> addable;
    std::vector<Node> removable;
};

// Nonnegative representative of a mod m.
inline int mod(int64_t a, int m) {
    int64_t r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Enumeration, in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
// All ell-multipartitions of total size n in a fixed deterministic order.
std::vector<Multipartition> multipartitions_of(int n, int ell);
// Number of ell-multipartitions of n.
Integer count_multipartitions(int n, int ell);

Partition conjugate(const Partition& lambda);
Partition dilate(int m, const Partition& lambda);
// z_lambda = prod_i i^{m_i} m_i!
Integer z_value(const Partition& lambda);
// Multiset of contents j - i, sorted ascending.
std::vector<int> content_polynomial(const Partition& lambda);

// Addable and removable nodes of a single partition (component index 0).
std::vector<Node> addable_nodes(const Partition& lambda);
std::vector<Node> removable_nodes(const Partition& lambda);
Partition add_node(const Partition& lambda, int row);
Partition remove_node(const Partition& lambda, int row);

// n_q for q in Z_m. Throws std::invalid_argument on a length mismatch.
std::vector<int> nodes_with_residue(const Multipartition& lambda, const Charge& s, int m);

// Residue-q addable/removable nodes, each list sorted by (component, content descending).
AddableRemovable addable_removable(const Multipartition& lambda, const Charge& s, int m, int q);

// Abacus with ell runners and beads at lambda_k - k + L (L a multiple of ell).
// Quotient component p collects the beads congruent to p mod ell.
CoreQuotient core_quotient(const Partition& lambda, int ell);
// Throws std::invalid_argument when cq.core is not an ell-core.
Partition rebuild_from_core_quotient(const CoreQuotient& cq, int ell);
bool is_core(const Partition& lambda, int ell);

// Canonical text forms: "[3,1]", "[]" and "[1]|[]|[2,2]".
std::string to_string(const Partition& lambda);
std::string to_string(const Multipartition& lambda);
std::string to_string(const Charge& s);
Partition parse_partition(std::string_view text);
Multipartition parse_multipartition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const Multipartition& lambda);

}  // namespace fockforge
