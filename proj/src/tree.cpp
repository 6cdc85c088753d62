#include "csf/tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace csf {

Tree Tree::single_vertex() {
    Tree t;
    t.order_ = 1;
    t.adj_.resize(1);
    return t;
}

Tree Tree::from_edges(int order, std::vector<std::pair<int, int>> edges) {
    if (order < 1) throw NotATreeError("order must be at least 1");
    if (static_cast<int>(edges.size()) != order - 1) {
        throw NotATreeError("tree of order " + std::to_string(order) + " needs " +
                            std::to_string(order - 1) + " edges, got " +
                            std::to_string(edges.size()));
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0) throw BadLabelError("negative vertex label");
        if (u >= order || v >= order) {
            throw BadLabelError("vertex label " + std::to_string(std::max(u, v)) +
                                " out of range for order " + std::to_string(order));
        }
        if (u == v) throw NotATreeError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw NotATreeError("duplicate edge");
    }

    Tree t;
    t.order_ = order;
    t.edges_ = std::move(edges);
    t.adj_.resize(static_cast<std::size_t>(order));
    for (auto [u, v] : t.edges_) {
        t.adj_[static_cast<std::size_t>(u)].push_back(v);
        t.adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    // Connected + correct edge count implies acyclic.
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != order) throw NotATreeError("graph is disconnected");
    return t;
}

int Tree::leaf_count() const {
    if (order_ == 1) return 0;
    int n = 0;
    for (const auto& nb : adj_) n += nb.size() == 1;
    return n;
}

bool Tree::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Tree parse_tree(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::set<int> labels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) {
            throw FormatError("line " + std::to_string(lineno) +
                              ": expected \"u v\"");
        }
        if (u < 0 || v < 0) throw BadLabelError("negative vertex label");
        if (u >= (1 << 24) || v >= (1 << 24)) {
            throw BadLabelError("vertex label too large");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        labels.insert(static_cast<int>(u));
        labels.insert(static_cast<int>(v));
    }
    if (edges.empty()) throw FormatError("no edges in input");
    int max_label = *labels.rbegin();
    if (static_cast<int>(labels.size()) != max_label + 1) {
        throw BadLabelError("vertex labels have gaps");
    }
    return Tree::from_edges(max_label + 1, std::move(edges));
}

Tree parse_tree_text(const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
}

std::string serialize_tree(const Tree& t) {
    std::ostringstream os;
    for (auto [u, v] : t.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

namespace {

// Vertices in BFS order from root, with parent[] filled in (-1 at root).
std::vector<int> bfs_order(const Tree& t, int root, std::vector<int>& parent) {
    parent.assign(static_cast<std::size_t>(t.order()), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(t.order()));
    order.push_back(root);
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : t.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = v;
                order.push_back(w);
            }
        }
    }
    parent[static_cast<std::size_t>(root)] = -1;
    return order;
}

}  // namespace

CanonicalCode rooted_canonical_code(const Tree& t, int root) {
    if (root < 0 || root >= t.order()) throw BadLabelError("root out of range");
    std::vector<int> parent;
    std::vector<int> order = bfs_order(t, root, parent);
    std::vector<std::string> code(static_cast<std::size_t>(t.order()));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        for (int w : t.neighbors(v)) {
            if (w != parent[static_cast<std::size_t>(v)]) {
                kids.push_back(std::move(code[static_cast<std::size_t>(w)]));
            }
        }
        std::sort(kids.begin(), kids.end());
        std::string& c = code[static_cast<std::size_t>(v)];
        c = "(";
        for (const auto& k : kids) c += k;
        c += ")";
    }
    return code[static_cast<std::size_t>(root)];
}

std::vector<int> centroids(const Tree& t) {
    int d = t.order();
    if (d == 1) return {0};
    std::vector<int> parent;
    std::vector<int> order = bfs_order(t, 0, parent);
    std::vector<int> size(static_cast<std::size_t>(d), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (parent[static_cast<std::size_t>(v)] != -1) {
            size[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] +=
                size[static_cast<std::size_t>(v)];
        }
    }
    std::vector<int> best;
    int best_weight = d;
    for (int v = 0; v < d; ++v) {
        int weight = d - size[static_cast<std::size_t>(v)];  // side toward root
        for (int w : t.neighbors(v)) {
            if (w != parent[static_cast<std::size_t>(v)]) {
                weight = std::max(weight, size[static_cast<std::size_t>(w)]);
            }
        }
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

CanonicalCode canonical_code(const Tree& t) {
    CanonicalCode best;
    for (int c : centroids(t)) {
        CanonicalCode code = rooted_canonical_code(t, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::pair<RootedTree, RootedTree> split_at_edge(const Tree& t, int u, int v) {
    if (u < 0 || v < 0 || u >= t.order() || v >= t.order() || !t.has_edge(u, v)) {
        throw EdgeNotFoundError("no edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
    }
    auto component = [&](int root, int banned) -> RootedTree {
        std::vector<int> newlabel(static_cast<std::size_t>(t.order()), -1);
        std::vector<int> order{root};
        newlabel[static_cast<std::size_t>(root)] = 0;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int a = order[i];
            for (int b : t.neighbors(a)) {
                if (a == root && b == banned) continue;
                if (newlabel[static_cast<std::size_t>(b)] == -1) {
                    newlabel[static_cast<std::size_t>(b)] =
                        static_cast<int>(order.size());
                    order.push_back(b);
                    edges.emplace_back(newlabel[static_cast<std::size_t>(a)],
                                       newlabel[static_cast<std::size_t>(b)]);
                }
            }
        }
        if (order.size() == 1) return {Tree::single_vertex(), 0};
        return {Tree::from_edges(static_cast<int>(order.size()), std::move(edges)),
                0};
    };
    return {component(u, v), component(v, u)};
}

RootedTree rooted_tree_from_code(const CanonicalCode& code) {
    if (code.empty()) throw FormatError("empty canonical code");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;
    int next = 0;
    for (char ch : code) {
        if (ch == '(') {
            if (stack.empty() && next > 0) {
                throw FormatError("canonical code has multiple roots");
            }
            if (!stack.empty()) edges.emplace_back(stack.back(), next);
            stack.push_back(next++);
        } else if (ch == ')') {
            if (stack.empty()) throw FormatError("unbalanced canonical code");
            stack.pop_back();
        } else {
            throw FormatError("canonical code may contain only parentheses");
        }
    }
    if (!stack.empty()) throw FormatError("unbalanced canonical code");
    if (next == 0) throw FormatError("empty canonical code");
    if (next == 1) return {Tree::single_vertex(), 0};
    return {Tree::from_edges(next, std::move(edges)), 0};
}

Tree tree_from_code(const CanonicalCode& code) {
    return rooted_tree_from_code(code).tree;
}

Tree relabel(const Tree& t, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != t.order()) {
        throw BadLabelError("permutation size does not match order");
    }
    if (t.order() == 1) return Tree::single_vertex();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.edges().size());
    for (auto [u, v] : t.edges()) {
        edges.emplace_back(perm[static_cast<std::size_t>(u)],
                           perm[static_cast<std::size_t>(v)]);
    }
    return Tree::from_edges(t.order(), std::move(edges));
}

}  // namespace csf
