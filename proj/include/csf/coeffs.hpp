#pragma once

#include <functional>
#include <map>
#include <string>

#include "csf/counts.hpp"
#include "csf/partition.hpp"
#include "csf/tree.hpp"

namespace csf {

inline constexpr int kNaiveMaxOrder = 22;
inline constexpr int kDefaultDpMaxOrder = 40;

// Power-sum coefficient map of a tree of order d: partition-of-d -> number of
// edge subsets inducing it. Unsigned; the sign of the p_lambda term is
// (-1)^(d - length(lambda)). Iteration order is descending lex.
class CoeffMap {
public:
    using Entries = std::map<Partition, Count, std::greater<Partition>>;

    explicit CoeffMap(int order);

    int order() const { return order_; }
    const Entries& entries() const { return entries_; }

    // Accumulates; the key must be a partition of the order.
    void add(const Partition& full, Count c);

    // Entry for a full partition of d; 0 if absent.
    Count at(const Partition& full) const;

    // Reduced-subscript lookup: appends the part d - weight(reduced), so
    // lookup((n)) is c_n and lookup(()) is the empty-cut entry. Throws
    // WeightTooLarge when weight(reduced) >= d.
    Count lookup(const Partition& reduced) const;

    // Invariant check: empty cut = 1, full cut = 1, row sums C(d-1, l-1).
    // Throws Inconsistent on violation.
    void validate() const;

    bool operator==(const CoeffMap&) const = default;

    // Canonical JSON: {"d":...,"entries":[{"partition":[...],"count":"..."}]}
    // with entries in descending lex order and counts as decimal strings.
    std::string to_json() const;
    static CoeffMap from_json_text(const std::string& text);

private:
    int order_ = 0;
    Entries entries_;
};

// Exhaustive edge-subset enumeration (2^(d-1) subsets, union-find per
// subset). The reference implementation; d <= 22.
CoeffMap coeffs_naive(const Tree& t);

// Bottom-up subset DP over the tree rooted at 0; equals coeffs_naive.
CoeffMap coeffs_dp(const Tree& t, int max_order = kDefaultDpMaxOrder);

// Cut profile of a rooted tree: partition of non-root component orders ->
// number of edge subsets producing it. The root component is tracked during
// the DP but kept out of the key; the empty partition maps to 1.
using CutProfile = std::map<Partition, Count, std::greater<Partition>>;
CutProfile rooted_cut_profile(const RootedTree& r,
                              int max_order = kDefaultDpMaxOrder);

// "p_1^4-3p_1^2p_2+3p_1p_3-p_4": terms by decreasing length; within a
// length, by parts read in ascending order.
std::string render_power_sum_polynomial(const CoeffMap& c);

}  // namespace csf
