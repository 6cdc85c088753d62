#pragma once

#include <map>
#include <string>
#include <utility>

#include "csf/coeffs.hpp"
#include "csf/counts.hpp"
#include "csf/tree.hpp"

namespace csf {

// One rooted isomorphism class seen in a census. c1_rooted is c_1 of the
// rooted representative (leaf cuts excluding the root); c1_tree is the leaf
// count of the underlying unrooted tree.
struct ClassInfo {
    int order = 0;
    CanonicalCode code;
    RootedTree representative;
    Count c1_rooted = 0;
    Count c1_tree = 0;
};

// Census of the 2(d-1) rooted subtrees of a tree: every edge deleted, both
// sides rooted at the cut and classified by rooted canonical code.
class CensusTable {
public:
    explicit CensusTable(int order) : order_(order) {}

    int order() const { return order_; }
    const std::map<std::pair<int, CanonicalCode>, Count>& rows() const {
        return rows_;
    }
    const std::map<CanonicalCode, ClassInfo>& classes() const { return classes_; }

    // Count for one class; 0 if absent.
    Count rho(int n, const CanonicalCode& code) const;

    // Count for the named class R_{n,kind}; 0 if absent (also for kind=2
    // with n < 3, where the class does not exist).
    Count rho_named(int n, int kind) const;

    // Sum of counts over all classes of order n.
    Count order_total(int n) const;

    // Sum over everything; 2(d-1) for any census.
    Count total() const;

    void record(const RootedTree& side);

private:
    int order_ = 0;
    std::map<std::pair<int, CanonicalCode>, Count> rows_;
    std::map<CanonicalCode, ClassInfo> classes_;
};

// Splits at every edge and classifies both sides. A single vertex has no
// edges and yields an empty table.
CensusTable build_census(const Tree& t);

// Cut count of a rooted tree for a given non-root component profile.
// rooted_coeff(r, (1)) is c_1(R). Throws WeightTooLarge if weight >= order.
Count rooted_coeff(const RootedTree& r, const Partition& lam);

// TSV rows "n<TAB>code<TAB>count<TAB>c1_rooted<TAB>c1_tree", sorted by
// (n, code), newline-terminated.
std::string census_tsv(const CensusTable& c);

}  // namespace csf
