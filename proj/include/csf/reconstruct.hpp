#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csf/coeffs.hpp"
#include "csf/enumerate.hpp"

namespace csf {

enum class CaseKind { kCaseI, kCaseII, kCaseNeither };

// Which branch of the reconstruction procedure applies. k is the long-leg
// order, set only for the neither case, where 3 <= d-k-1 < d/2 - 1.
struct CaseTag {
    CaseKind kind = CaseKind::kCaseII;
    int k = 0;

    bool operator==(const CaseTag&) const = default;
};

// "case i", "case ii", "neither, k=5".
std::string format_case_tag(const CaseTag& tag);

// (rho_{n,1}, rho_{n,2}) for n = 3..n_max, solved from coefficients alone.
struct LadderTable {
    int n_max = 3;
    std::vector<std::pair<Count, Count>> rho;  // index 0 is n = 3

    const std::pair<Count, Count>& at(int n) const {
        if (n < 3 || n > n_max) throw OutOfRangeError("ladder index out of range");
        return rho[static_cast<std::size_t>(n - 3)];
    }
};

// Case detection from coefficients of a (promised) 2-spider, d >= 6:
// the case-(i) signature, then the first monotonicity violation
// c_n < c_{n+1} on 3 <= n, n+1 < d/2 (neither case, k = d-n-1), else (ii).
CaseTag classify_case(const CoeffMap& c);

// Base (rho_{3,1}, rho_{3,2}) via solve_rho3, then for n = 4..n_max the 2x2
// system {rho_{n,1}+rho_{n,2} = c_n; 2 rho_{n,1}+3 rho_{n,2} = c_{n-1,1}
// - (c_1-1) rho_{n-1,1} - (c_1-2) rho_{n-1,2}}. Requires n_max < d/2.
LadderTable solve_ladder(const CoeffMap& c, int n_max);

struct ReconstructResult {
    SpiderSpec spec;
    std::optional<CaseTag> tag;  // set when d >= 6
    bool via_fallback = false;   // d <= 9 exhaustive matching
};

// Recovers the spider signature from the coefficient map alone. d <= 9
// falls back to exhaustive matching over all signatures; the tag is still
// reported when computable.
ReconstructResult reconstruct_two_spider(const CoeffMap& c);

}  // namespace csf
