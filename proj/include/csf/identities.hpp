#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csf/census.hpp"
#include "csf/coeffs.hpp"
#include "csf/tree.hpp"

namespace csf {

// One identity instance: lhs from the coefficient map, rhs from the census.
struct IdentityReport {
    CanonicalCode tree_code;
    std::string identity;
    int n = -1;  // parameter; -1 when the identity has none
    Count lhs = 0;
    Count rhs = 0;
    bool pass = false;
};

// c_{n,1} = sum_i (c_1 - c_1(R_{n,i})) rho_{n,i}
//         + sum_j c_1(T_{n+1,j}) rho_{n+1,j}, valid for 2 <= n < (d-1)/2.
IdentityReport check_cn1(const Tree& t, int n);

// c_{1,1,1,1} = C(c_1,4) + C(c_1-1,2) c_2 + C(c_2,2)
//             + (c_1-1) rho_{3,1} + (c_1-2) rho_{3,2} + Q_4, for d >= 6,
// where Q_4 counts order-4 rooted subtrees (= c_4 except doubled at d = 8).
IdentityReport check_c1111(const Tree& t);

// The counting relations: c_n = sum_i rho_{n,i} = sum_i rho_{d-n,i} for
// 1 <= n < d/2, the halving identity at n = d/2 for even d, c_1 = leaf
// count (d >= 3), and c_{1,1} = C(c_1,2) + rho_{2,1} (d >= 4).
std::vector<IdentityReport> check_relations(const Tree& t);

// Every identity this module can state about t.
std::vector<IdentityReport> check_all(const Tree& t);

// Recovers (rho_{3,1}, rho_{3,2}) from coefficients alone via c_3 and
// c_{1,1,1,1}; d >= 6. Throws Inconsistent when the solution is negative
// or the coefficients cannot belong to a tree.
std::pair<Count, Count> solve_rho3(const CoeffMap& c);

// TSV rows "code<TAB>identity<TAB>n<TAB>lhs<TAB>rhs<TAB>pass|fail"; the n
// column renders "-" when the identity has no parameter.
std::string identities_tsv(const std::vector<IdentityReport>& reports);

}  // namespace csf
