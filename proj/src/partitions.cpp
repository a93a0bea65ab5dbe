#include "fockforge/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fockforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[k];
    }
}

Multipartition::Multipartition(int ell) : components_(static_cast<std::size_t>(ell)) {
    if (ell < 1) throw std::invalid_argument("multipartition needs ell >= 1");
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("multipartition needs ell >= 1");
}

int Multipartition::size() const {
    int n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
}

Multipartition Multipartition::with_component(int p, Partition part) const {
    Multipartition out = *this;
    out.components_[p] = std::move(part);
    return out;
}

int Charge::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Multipartition> multipartitions_of(int n, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    std::vector<Multipartition> out;
    if (n < 0) return out;
    std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) by_size[k] = partitions_of(k);

    std::vector<Partition> cur(static_cast<std::size_t>(ell));
    std::function<void(int, int)> rec = [&](int p, int remaining) {
        if (p == ell - 1) {
            for (const auto& part : by_size[remaining]) {
                cur[p] = part;
                out.emplace_back(cur);
            }
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            for (const auto& part : by_size[k]) {
                cur[p] = part;
                rec(p + 1, remaining - k);
            }
        }
    };
    rec(0, n);
    return out;
}

Integer count_multipartitions(int n, int ell) {
    if (n < 0) return 0;
    // Coefficients of prod_k (1 - t^k)^{-ell}.
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int rep = 0; rep < ell; ++rep)
        for (int k = 1; k <= n; ++k)
            for (int t = k; t <= n; ++t) c[t] += c[t - k];
    return c[n];
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.empty()) {
        cols.resize(static_cast<std::size_t>(lambda.row(1)), 0);
        for (int part : lambda.parts())
            for (int j = 0; j < part; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

Partition dilate(int m, const Partition& lambda) {
    if (m < 1) throw std::invalid_argument("dilation factor must be positive");
    std::vector<int> parts = lambda.parts();
    for (int& x : parts) x *= m;
    return Partition(std::move(parts));
}

Integer z_value(const Partition& lambda) {
    Integer z = 1;
    const auto& parts = lambda.parts();
    for (std::size_t k = 0; k < parts.size();) {
        std::size_t run = k;
        while (run < parts.size() && parts[run] == parts[k]) ++run;
        const auto mult = static_cast<unsigned long>(run - k);
        for (unsigned long t = 1; t <= mult; ++t) z *= static_cast<long>(parts[k]) * static_cast<long>(t);
        k = run;
    }
    return z;
}

std::vector<int> content_polynomial(const Partition& lambda) {
    std::vector<int> contents;
    contents.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) contents.push_back(j - i);
    std::sort(contents.begin(), contents.end());
    return contents;
}

std::vector<Node> addable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int i = 1; i <= lambda.length() + 1; ++i)
        if (i == 1 || lambda.row(i - 1) > lambda.row(i)) out.push_back({0, i, lambda.row(i) + 1});
    return out;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i) > lambda.row(i + 1)) out.push_back({0, i, lambda.row(i)});
    return out;
}

Partition add_node(const Partition& lambda, int row) {
    std::vector<int> parts = lambda.parts();
    if (row == lambda.length() + 1)
        parts.push_back(1);
    else
        ++parts.at(static_cast<std::size_t>(row - 1));
    return Partition(std::move(parts));
}

Partition remove_node(const Partition& lambda, int row) {
    std::vector<int> parts = lambda.parts();
    if (--parts.at(static_cast<std::size_t>(row - 1)) == 0) parts.pop_back();
    return Partition(std::move(parts));
}

namespace {

void require_same_length(const Multipartition& lambda, const Charge& s) {
    if (lambda.ell() != s.ell())
        throw std::invalid_argument("charge length " + std::to_string(s.ell()) +
                                    " does not match multipartition length " +
                                    std::to_string(lambda.ell()));
}

// beta_k = lambda_k - k + L for k = 1..L, decreasing.
std::vector<int> beta_numbers(const Partition& lambda, int L) {
    std::vector<int> beta(static_cast<std::size_t>(L));
    for (int k = 1; k <= L; ++k) beta[k - 1] = lambda.row(k) - k + L;
    return beta;
}

Partition from_beta_numbers(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int k = 1; k <= L; ++k) {
        int part = beta[k - 1] - (L - k);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

// Positions t of the beads on each runner, decreasing.
std::vector<std::vector<int>> runners(const Partition& lambda, int ell, int L) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(ell));
    for (int b : beta_numbers(lambda, L)) out[b % ell].push_back(b / ell);
    return out;
}

Partition from_runner_positions(const std::vector<int>& positions) {
    const int c = static_cast<int>(positions.size());
    std::vector<int> parts;
    for (int k = 1; k <= c; ++k) {
        int part = positions[k - 1] - (c - k);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

}  // namespace

std::vector<int> nodes_with_residue(const Multipartition& lambda, const Charge& s, int m) {
    require_same_length(lambda, s);
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int p = 0; p < lambda.ell(); ++p) {
        const Partition& part = lambda[p];
        for (int i = 1; i <= part.length(); ++i)
            for (int j = 1; j <= part.row(i); ++j) ++counts[mod(s[p] + j - i, m)];
    }
    return counts;
}

AddableRemovable addable_removable(const Multipartition& lambda, const Charge& s, int m, int q) {
    require_same_length(lambda, s);
    AddableRemovable out;
    for (int p = 0; p < lambda.ell(); ++p) {
        for (Node node : addable_nodes(lambda[p])) {
            node.component = p;
            if (mod(s[p] + node.content(), m) == mod(q, m)) out.addable.push_back(node);
        }
        for (Node node : removable_nodes(lambda[p])) {
            node.component = p;
            if (mod(s[p] + node.content(), m) == mod(q, m)) out.removable.push_back(node);
        }
    }
    auto order = [](const Node& a, const Node& b) {
        if (a.component != b.component) return a.component < b.component;
        return a.content() > b.content();
    };
    std::sort(out.addable.begin(), out.addable.end(), order);
    std::sort(out.removable.begin(), out.removable.end(), order);
    return out;
}

CoreQuotient core_quotient(const Partition& lambda, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    const int L = ell * ((lambda.length() + ell - 1) / ell);
    auto beads = runners(lambda, ell, L);
    std::vector<Partition> quotient;
    std::vector<int> core_beta;
    for (int p = 0; p < ell; ++p) {
        quotient.push_back(from_runner_positions(beads[p]));
        for (int t = 0; t < static_cast<int>(beads[p].size()); ++t) core_beta.push_back(p + ell * t);
    }
    return {from_beta_numbers(std::move(core_beta)), Multipartition(std::move(quotient))};
}

bool is_core(const Partition& lambda, int ell) { return core_quotient(lambda, ell).quotient.size() == 0; }

Partition rebuild_from_core_quotient(const CoreQuotient& cq, int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    if (cq.quotient.ell() != ell) throw std::invalid_argument("quotient must have ell components");
    if (!is_core(cq.core, ell)) throw std::invalid_argument(to_string(cq.core) + " is not an ell-core");
    int max_len = 0;
    for (const auto& part : cq.quotient.components()) max_len = std::max(max_len, part.length());
    const int L = ell * (cq.core.length() + max_len + 1);
    auto core_beads = runners(cq.core, ell, L);
    std::vector<int> beta;
    for (int p = 0; p < ell; ++p) {
        const int c = static_cast<int>(core_beads[p].size());
        const Partition& mu = cq.quotient[p];
        for (int k = 1; k <= c; ++k) beta.push_back(p + ell * (mu.row(k) + c - k));
    }
    return from_beta_numbers(std::move(beta));
}

std::string to_string(const Partition& lambda) {
    std::string out = "[";
    for (int k = 0; k < lambda.length(); ++k) {
        if (k) out += ',';
        out += std::to_string(lambda.parts()[k]);
    }
    return out + "]";
}

std::string to_string(const Multipartition& lambda) {
    std::string out;
    for (int p = 0; p < lambda.ell(); ++p) {
        if (p) out += '|';
        out += to_string(lambda[p]);
    }
    return out;
}

std::string to_string(const Charge& s) {
    std::string out;
    for (int p = 0; p < s.ell(); ++p) {
        if (p) out += ',';
        out += std::to_string(s[p]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    std::string_view body = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view token = trim(body.substr(0, comma));
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(std::string(token)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (trim(body).empty()) throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

Multipartition parse_multipartition(std::string_view text) {
    std::vector<Partition> components;
    while (true) {
        auto bar = text.find('|');
        components.push_back(parse_partition(text.substr(0, bar)));
        if (bar == std::string_view::npos) break;
        text.remove_prefix(bar + 1);
    }
    return Multipartition(std::move(components));
}

std::ostream& operator<<(std::ostream& os, const Partition& lambda) { return os << to_string(lambda); }
std::ostream& operator<<(std::ostream& os, const Multipartition& lambda) { return os << to_string(lambda); }

}  // namespace fockforge
