#include "csf/enumerate.hpp"

#include <algorithm>
#include <sstream>

namespace csf {

namespace {

void check_order(int order, int max_order) {
    if (order < 1 || order > max_order) {
        throw OrderTooLargeError("order " + std::to_string(order) +
                                 " outside 1.." + std::to_string(max_order));
    }
}

// One successor step on a rooted level sequence. p < 0 means locate the
// rightmost entry > 1. Returns false when the layout is the last one (star).
bool next_rooted_layout(std::vector<int>& layout, int p = -1) {
    int n = static_cast<int>(layout.size());
    if (p < 0) {
        p = n - 1;
        while (p >= 0 && layout[p] == 1) --p;
    }
    if (p <= 0) return false;
    int q = p - 1;
    while (layout[q] != layout[p] - 1) --q;
    for (int i = p; i < n; ++i) layout[i] = layout[i - p + q];
    return true;
}

// Splits a free-tree candidate layout at the root: left = first root subtree
// (levels shifted down by one), rest = the layout with that subtree removed.
void split_layout(const std::vector<int>& layout, std::vector<int>& left,
                  std::vector<int>& rest) {
    int n = static_cast<int>(layout.size());
    int m = n;
    bool one_found = false;
    for (int i = 0; i < n; ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    left.clear();
    rest.clear();
    for (int i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    rest.push_back(0);
    for (int i = m; i < n; ++i) rest.push_back(layout[i]);
}

// Free-tree validity test: the first root subtree must be no higher than the
// remainder, and on equal height no larger, and on equal size no later
// lexicographically. Invalid candidates jump to the next valid layout.
void next_free_layout(std::vector<int>& layout) {
    std::vector<int> left, rest;
    split_layout(layout, left, rest);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) {
            valid = false;
        } else if (left.size() == rest.size() && left > rest) {
            valid = false;
        }
    }
    if (valid) return;
    int p = static_cast<int>(left.size());
    int old_level = layout[p];
    next_rooted_layout(layout, p);
    if (old_level > 2) {
        split_layout(layout, left, rest);
        int h = *std::max_element(left.begin(), left.end());
        int n = static_cast<int>(layout.size());
        for (int i = 0; i <= h; ++i) layout[n - h - 1 + i] = i + 1;
    }
}

Tree tree_from_layout(const std::vector<int>& layout) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> stack;  // (vertex, level)
    for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
        int level = layout[i];
        while (!stack.empty() && stack.back().second >= level) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(stack.back().first, i);
        stack.emplace_back(i, level);
    }
    if (layout.size() == 1) return Tree::single_vertex();
    return Tree::from_edges(static_cast<int>(layout.size()), std::move(edges));
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int order, int max_order) : order_(order) {
    check_order(order, max_order);
    if (order_ == 1) return;
    // Path rooted near the middle: the lexicographically largest valid layout.
    for (int i = 0; i <= order_ / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (order_ + 1) / 2; ++i) layout_.push_back(i);
}

std::optional<Tree> FreeTreeGenerator::next() {
    if (done_) return std::nullopt;
    if (order_ == 1) {
        done_ = true;
        return Tree::single_vertex();
    }
    next_free_layout(layout_);
    Tree t = tree_from_layout(layout_);
    if (!next_rooted_layout(layout_)) done_ = true;
    return t;
}

RootedTreeGenerator::RootedTreeGenerator(int order, int max_order)
    : order_(order) {
    check_order(order, max_order);
    for (int i = 0; i < order_; ++i) layout_.push_back(i);
}

std::optional<RootedTree> RootedTreeGenerator::next() {
    if (done_) return std::nullopt;
    RootedTree r{tree_from_layout(layout_), 0};
    if (!next_rooted_layout(layout_)) done_ = true;
    return r;
}

std::vector<Tree> all_trees(int order, int max_order) {
    FreeTreeGenerator gen(order, max_order);
    std::vector<Tree> out;
    while (auto t = gen.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<RootedTree> all_rooted_trees(int order, int max_order) {
    RootedTreeGenerator gen(order, max_order);
    std::vector<RootedTree> out;
    while (auto r = gen.next()) out.push_back(std::move(*r));
    return out;
}

RootedTree build_R(int n, int kind) {
    if (kind == 1) {
        if (n < 1) throw InvalidClassError("R_{n,1} needs n >= 1");
        if (n == 1) return {Tree::single_vertex(), 0};
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        return {Tree::from_edges(n, std::move(edges)), 0};
    }
    if (kind == 2) {
        if (n < 3) throw InvalidClassError("R_{n,2} needs n >= 3");
        // Path 0..n-2 rooted at 0; vertex n-1 hangs off the second
        // outward-most path vertex n-3.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 3, n - 1);
        return {Tree::from_edges(n, std::move(edges)), 0};
    }
    throw InvalidClassError("kind must be 1 or 2");
}

void validate_spider_spec(const SpiderSpec& s) {
    for (int q : s.mu.parts()) {
        if (q < 3) throw InvalidSpecError("2-leg orders must be >= 3");
    }
    if (s.lambda.length() + s.mu.length() < 3) {
        throw InvalidSpecError("spider needs at least 3 legs");
    }
}

Tree build_spider(const SpiderSpec& s) {
    validate_spider_spec(s);
    std::vector<std::pair<int, int>> edges;
    int next = 1;  // torso is 0
    for (int q : s.lambda.parts()) {
        int prev = 0;
        for (int i = 0; i < q; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    for (int q : s.mu.parts()) {
        // Path of q-1 vertices, then the fork vertex on the second
        // outward-most one (R_{q,2} hung by its root).
        int prev = 0;
        int second_outer = -1;
        for (int i = 0; i < q - 1; ++i) {
            edges.emplace_back(prev, next);
            if (i == q - 3) second_outer = next;
            prev = next++;
        }
        edges.emplace_back(second_outer, next++);
    }
    return Tree::from_edges(next, std::move(edges));
}

std::vector<SpiderSpec> all_two_spiders(int d) {
    std::vector<SpiderSpec> out;
    if (d < 4) return out;
    int total = d - 1;
    for (int mu_weight = 0; mu_weight <= total; ++mu_weight) {
        std::vector<Partition> mus = mu_weight == 0
                                         ? std::vector<Partition>{Partition{}}
                                         : partitions_of(mu_weight, 3);
        std::vector<Partition> lambdas =
            total - mu_weight == 0 ? std::vector<Partition>{Partition{}}
                                   : partitions_of(total - mu_weight, 1);
        for (const auto& mu : mus) {
            for (const auto& lambda : lambdas) {
                if (lambda.length() + mu.length() < 3) continue;
                out.push_back({lambda, mu});
            }
        }
    }
    return out;
}

SpiderSpec parse_spider_spec(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) {
        throw InvalidSpecError("spider spec needs a semicolon: \"a,b;x,y\"");
    }
    if (text.find(';', semi + 1) != std::string::npos) {
        throw InvalidSpecError("spider spec has more than one semicolon");
    }
    auto parse_side = [](const std::string& side) -> Partition {
        std::vector<int> parts;
        std::string token;
        std::istringstream ss(side);
        while (std::getline(ss, token, ',')) {
            std::istringstream ts(token);
            int value;
            std::string rest;
            if (!(ts >> value) || (ts >> rest)) {
                throw InvalidSpecError("bad leg order \"" + token + "\"");
            }
            if (value < 1) throw InvalidSpecError("leg orders must be positive");
            parts.push_back(value);
        }
        return Partition(std::move(parts));
    };
    SpiderSpec s{parse_side(text.substr(0, semi)),
                 parse_side(text.substr(semi + 1))};
    validate_spider_spec(s);
    return s;
}

std::string format_spider_spec(const SpiderSpec& s) {
    auto side = [](const Partition& p) {
        std::string out;
        const auto& parts = p.parts();
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            if (!out.empty()) out += ',';
            out += std::to_string(*it);
        }
        return out;
    };
    return side(s.lambda) + ";" + side(s.mu);
}

}  // namespace csf
