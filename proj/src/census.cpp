#include "csf/census.hpp"

#include <sstream>

#include "csf/enumerate.hpp"

namespace csf {

Count CensusTable::rho(int n, const CanonicalCode& code) const {
    auto it = rows_.find({n, code});
    return it == rows_.end() ? 0 : it->second;
}

Count CensusTable::rho_named(int n, int kind) const {
    if (kind == 2 && n < 3) return 0;
    if (kind == 1 && n < 1) return 0;
    RootedTree r = build_R(n, kind);
    return rho(n, rooted_canonical_code(r));
}

Count CensusTable::order_total(int n) const {
    Count sum = 0;
    for (auto it = rows_.lower_bound({n, std::string()});
         it != rows_.end() && it->first.first == n; ++it) {
        sum = checked_add(sum, it->second);
    }
    return sum;
}

Count CensusTable::total() const {
    Count sum = 0;
    for (const auto& [key, count] : rows_) sum = checked_add(sum, count);
    return sum;
}

void CensusTable::record(const RootedTree& side) {
    int n = side.tree.order();
    CanonicalCode code = rooted_canonical_code(side);
    Count& slot = rows_[{n, code}];
    slot = checked_add(slot, 1);
    if (!classes_.count(code)) {
        ClassInfo info{n, code, side,
                       n >= 2 ? rooted_coeff(side, Partition{1}) : Count{0},
                       static_cast<Count>(side.tree.leaf_count())};
        classes_.emplace(std::move(code), std::move(info));
    }
}

CensusTable build_census(const Tree& t) {
    CensusTable table(t.order());
    for (auto [u, v] : t.edges()) {
        auto [side_u, side_v] = split_at_edge(t, u, v);
        table.record(side_u);
        table.record(side_v);
    }
    return table;
}

Count rooted_coeff(const RootedTree& r, const Partition& lam) {
    if (lam.weight() >= r.tree.order()) {
        throw WeightTooLargeError("profile weight " + std::to_string(lam.weight()) +
                                  " must be below " +
                                  std::to_string(r.tree.order()));
    }
    CutProfile profile = rooted_cut_profile(r);
    auto it = profile.find(lam);
    return it == profile.end() ? 0 : it->second;
}

std::string census_tsv(const CensusTable& c) {
    std::ostringstream os;
    for (const auto& [key, count] : c.rows()) {
        const ClassInfo& info = c.classes().at(key.second);
        os << key.first << '\t' << key.second << '\t' << count << '\t'
           << info.c1_rooted << '\t' << info.c1_tree << '\n';
    }
    return os.str();
}

}  // namespace csf
