#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csf/partition.hpp"
#include "csf/tree.hpp"

namespace csf {

inline constexpr int kDefaultEnumMaxOrder = 22;

// Streams one representative per free isomorphism class of the given order,
// in deterministic order (level-sequence successor algorithm, path first,
// star last).
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int order, int max_order = kDefaultEnumMaxOrder);
    std::optional<Tree> next();

private:
    int order_;
    std::vector<int> layout_;
    bool done_ = false;
};

// Streams one representative per rooted isomorphism class of the given order
// (root = 0), path-rooted-at-leaf first.
class RootedTreeGenerator {
public:
    explicit RootedTreeGenerator(int order, int max_order = kDefaultEnumMaxOrder);
    std::optional<RootedTree> next();

private:
    int order_;
    std::vector<int> layout_;
    bool done_ = false;
};

std::vector<Tree> all_trees(int order, int max_order = kDefaultEnumMaxOrder);
std::vector<RootedTree> all_rooted_trees(int order,
                                         int max_order = kDefaultEnumMaxOrder);

// kind 1: path of n vertices rooted at one end. kind 2 (n >= 3): path of n-1
// vertices rooted at one end, plus one extra vertex attached to the second
// outward-most vertex from the root.
RootedTree build_R(int n, int kind);

// Spider signature: lambda lists the 1-leg orders, mu the 2-leg orders.
struct SpiderSpec {
    Partition lambda;
    Partition mu;

    int order() const { return 1 + lambda.weight() + mu.weight(); }
    auto operator<=>(const SpiderSpec&) const = default;
};

// Throws InvalidSpec unless: every mu part >= 3, every lambda part >= 1
// (Partition enforces this), and there are at least 3 legs in total.
void validate_spider_spec(const SpiderSpec& s);

// Torso = vertex 0; one leg per part, 1-legs hung as paths, 2-legs hung as
// R_{q,2} by its root. Legs are attached in stored (descending) part order.
Tree build_spider(const SpiderSpec& s);

// All signatures of order d: partition pairs with sum d-1, >= 3 legs, mu
// parts >= 3. Plain spiders (mu empty) come first.
std::vector<SpiderSpec> all_two_spiders(int d);

// "a,b,...;x,y,..." with a mandatory semicolon; either side may be empty.
// Parts may appear in any order in the string; they are stored normalized.
SpiderSpec parse_spider_spec(const std::string& text);

// Renders parts in ascending order, e.g. "1,1;4,4" or "1,2,5;".
std::string format_spider_spec(const SpiderSpec& s);

}  // namespace csf
