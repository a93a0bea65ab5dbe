#include "fockforge/crystal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fockforge {

NodeOrder node_order(CrystalOrder order) {
    if (order == CrystalOrder::ContentThenComponent)
        return [](const Node& a, const Node& b, const Charge& s) {
            return std::pair(s[a.component] + a.content(), a.component) <
                   std::pair(s[b.component] + b.content(), b.component);
        };
    return [](const Node& a, const Node& b, const Charge& s) {
        return std::pair(a.component, s[a.component] + a.content()) <
               std::pair(b.component, s[b.component] + b.content());
    };
}

std::string to_string(CrystalOrder order) {
    return order == CrystalOrder::ContentThenComponent ? "content-then-component" : "component-then-content";
}

CrystalOrder parse_crystal_order(std::string_view text) {
    if (text == "content-then-component") return CrystalOrder::ContentThenComponent;
    if (text == "component-then-content") return CrystalOrder::ComponentThenContent;
    throw std::invalid_argument("unknown crystal order '" + std::string(text) + "'");
}

namespace {

struct Letter {
    Node node;
    bool addable;
};

// Surviving letters after (-+) cancellation, in reading order.
std::vector<Letter> reduced_word(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                 const NodeOrder& order) {
    const AddableRemovable ar = addable_removable(lambda, params.charge, params.m, q);
    std::vector<Letter> word;
    for (const Node& n : ar.addable) word.push_back({n, true});
    for (const Node& n : ar.removable) word.push_back({n, false});
    std::sort(word.begin(), word.end(),
              [&](const Letter& a, const Letter& b) { return order(a.node, b.node, params.charge); });
    std::vector<Letter> stack;
    for (const Letter& l : word) {
        if (l.addable && !stack.empty() && !stack.back().addable) {
            stack.pop_back();
            continue;
        }
        stack.push_back(l);
    }
    return stack;
}

}  // namespace

std::optional<Multipartition> tilde_f(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      const NodeOrder& order) {
    const auto word = reduced_word(q, lambda, params, order);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        if (it->addable)
            return lambda.with_component(it->node.component, add_node(lambda[it->node.component], it->node.row));
    return std::nullopt;
}

std::optional<Multipartition> tilde_e(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      const NodeOrder& order) {
    for (const Letter& l : reduced_word(q, lambda, params, order))
        if (!l.addable)
            return lambda.with_component(l.node.component, remove_node(lambda[l.node.component], l.node.row));
    return std::nullopt;
}

std::optional<Multipartition> tilde_f(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      CrystalOrder order) {
    return tilde_f(q, lambda, params, node_order(order));
}

std::optional<Multipartition> tilde_e(int q, const Multipartition& lambda, const FockSpaceParams& params,
                                      CrystalOrder order) {
    return tilde_e(q, lambda, params, node_order(order));
}

CrystalGraph build_graph(const FockSpaceParams& params, const NodeOrder& order) {
    params.validate();
    CrystalGraph g;
    g.params = params;
    for (int n = 0; n <= params.degree_bound; ++n)
        for (auto& mp : multipartitions_of(n, params.ell)) {
            g.index.emplace(mp, static_cast<int>(g.vertices.size()));
            g.vertices.push_back({std::move(mp), 0, 0});
        }
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        CrystalVertex& vert = g.vertices[v];
        vert.component_id = v;
        // Vertices of lower degree are already resolved.
        for (int q = 0; q < params.m; ++q)
            if (auto up = tilde_e(q, vert.mp, params, order)) {
                const CrystalVertex& parent = g.vertices[g.index.at(*up)];
                vert.depth = parent.depth + 1;
                vert.component_id = parent.component_id;
                break;
            }
        if (vert.mp.size() == params.degree_bound) continue;
        for (int q = 0; q < params.m; ++q)
            if (auto down = tilde_f(q, vert.mp, params, order)) g.arrows.push_back({v, -1, q});
    }
    for (auto& a : g.arrows) a.to = g.index.at(*tilde_f(a.q, g.vertices[a.from].mp, params, order));
    return g;
}

CrystalGraph build_graph(const FockSpaceParams& params, CrystalOrder order) {
    return build_graph(params, node_order(order));
}

std::map<int, int> depth_census(const CrystalGraph& g, int n) {
    std::map<int, int> census;
    for (const auto& v : g.vertices)
        if (v.mp.size() == n) ++census[v.depth];
    return census;
}

int highest_weight_count(const CrystalGraph& g, int n) {
    int count = 0;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        if (g.vertices[v].mp.size() == n && g.is_highest_weight(v)) ++count;
    return count;
}

nlohmann::ordered_json to_json(const CrystalGraph& g) {
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices)
        vertices.push_back({{"mp", to_string(v.mp)},
                            {"degree", v.mp.size()},
                            {"depth", v.depth},
                            {"component", v.component_id}});
    nlohmann::ordered_json arrows = nlohmann::ordered_json::array();
    for (const auto& a : g.arrows) arrows.push_back({a.from, a.to, a.q});
    return {{"vertices", vertices}, {"arrows", arrows}};
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        out << "  v" << v << " [label=\"" << to_string(g.vertices[v].mp) << "\"];\n";
    for (const auto& a : g.arrows) out << "  v" << a.from << " -> v" << a.to << " [label=\"" << a.q << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace fockforge
