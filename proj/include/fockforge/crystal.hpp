#pragma once

// Kashiwara operators on charged multipartitions by the signature rule, and
// the crystal graph on all degrees up to a bound.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fockforge/fock.hpp"
#include "fockforge/partitions.hpp"

namespace fockforge {

enum class CrystalOrder {
    ContentThenComponent,  // by s_p + content, ties by smaller component
    ComponentThenContent,  // by component, then s_p + content
};

// Strict order on the residue-q addable/removable nodes: true when a is read
// before b in the signature word.
using NodeOrder = std::function<bool(const Node& a, const Node& b, const Charge& s)>;

NodeOrder node_order(CrystalOrder order);
std::string to_string(CrystalOrder order);
// Accepts "content-then-component" and "component-then-content".
CrystalOrder parse_crystal_order(std::string_view text);

// Signature rule: list the addable (+) and removable (-) q-nodes in reading
// order, cancel adjacent (-+) pairs until the word is +...+-...-, then f adds
// the node of the rightmost + and e removes the node of the leftmost -.
std::optional<Multipartition> tilde_f(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      const NodeOrder& order);
std::optional<Multipartition> tilde_e(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      const NodeOrder& order);
std::optional<Multipartition> tilde_f(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      CrystalOrder order = CrystalOrder::ContentThenComponent);
std::optional<Multipartition> tilde_e(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      CrystalOrder order = CrystalOrder::ContentThenComponent);

struct CrystalVertex {
    Multipartition mp;
    int depth = 0;         // number of e-steps to the highest-weight vertex
    int component_id = 0;  // index of that highest-weight vertex
};

struct CrystalArrow {
    int from = 0;
    int to = 0;  // tilde_f_q(from) == to
    int q = 0;
};

struct CrystalGraph {
    FockSpaceParams params;
    std::vector<CrystalVertex> vertices;  // by degree, then multipartitions_of order
    std::vector<CrystalArrow> arrows;     // sorted by (from, q)
    std::map<Multipartition, int> index;

    bool is_highest_weight(int v) const { return vertices[v].component_id == v; }
};

CrystalGraph build_graph(const FockSpaceParams& params, const NodeOrder& order);
CrystalGraph build_graph(const FockSpaceParams& params, CrystalOrder order = CrystalOrder::ContentThenComponent);

// Depth -> number of vertices of degree n.
std::map<int, int> depth_census(const CrystalGraph& g, int n);
int highest_weight_count(const CrystalGraph& g, int n);

nlohmann::ordered_json to_json(const CrystalGraph& g);
std::string to_dot(const CrystalGraph& g);

}  // namespace fockforge
