#include "csf/reconstruct.hpp"

#include <algorithm>

#include "csf/identities.hpp"

namespace csf {

std::string format_case_tag(const CaseTag& tag) {
    switch (tag.kind) {
        case CaseKind::kCaseI:
            return "case i";
        case CaseKind::kCaseII:
            return "case ii";
        case CaseKind::kCaseNeither:
            return "neither, k=" + std::to_string(tag.k);
    }
    return "?";
}

CaseTag classify_case(const CoeffMap& c) {
    int d = c.order();
    if (d < 6) {
        throw OutOfRangeError("case detection needs d >= 6, got d=" +
                              std::to_string(d));
    }
    Count rho32;
    try {
        rho32 = solve_rho3(c).second;
    } catch (const InconsistentError& e) {
        throw NotASpiderSignatureError(e.what());
    }
    Count c1 = c.lookup({1});
    if ((rho32 == 1 && c1 == 3) || (rho32 == 2 && c1 == 4)) {
        return {CaseKind::kCaseI, 0};
    }
    for (int n = 3; 2 * (n + 1) < d; ++n) {
        if (c.lookup({n}) < c.lookup({n + 1})) {
            return {CaseKind::kCaseNeither, d - n - 1};
        }
    }
    return {CaseKind::kCaseII, 0};
}

LadderTable solve_ladder(const CoeffMap& c, int n_max) {
    int d = c.order();
    if (n_max < 3 || 2 * n_max >= d) {
        throw OutOfRangeError("ladder needs 3 <= n_max < d/2, got n_max=" +
                              std::to_string(n_max) + ", d=" + std::to_string(d));
    }
    LadderTable table;
    table.n_max = n_max;
    table.rho.push_back(solve_rho3(c));
    Count c1 = c.lookup({1});
    using Wide = __int128;
    for (int n = 4; n <= n_max; ++n) {
        Wide a = static_cast<Wide>(c.lookup({n}));
        const auto& [p1, p2] = table.rho.back();
        Wide b = static_cast<Wide>(c.lookup({n - 1, 1})) -
                 static_cast<Wide>(c1 - 1) * static_cast<Wide>(p1) -
                 static_cast<Wide>(c1 - 2) * static_cast<Wide>(p2);
        Wide rho_n1 = 3 * a - b;
        Wide rho_n2 = b - 2 * a;
        if (rho_n1 < 0 || rho_n2 < 0) {
            throw InconsistentError(
                "ladder step n=" + std::to_string(n) +
                " has no nonnegative solution; input is not a case-(ii) or "
                "neither-case 2-spider coefficient map");
        }
        table.rho.emplace_back(static_cast<Count>(rho_n1),
                               static_cast<Count>(rho_n2));
    }
    return table;
}

namespace {

// lambda*_n / mu*_n for n = 1..n_cap (index n-1): the number of 1-legs and
// 2-legs of order >= n, assembled from c_1, c_2 and the ladder.
struct StarColumns {
    std::vector<Count> lambda_star;
    std::vector<Count> mu_star;
};

StarColumns star_columns(const CoeffMap& c, const LadderTable& ladder,
                         int n_cap) {
    Count c1 = c.lookup({1});
    Count rho32 = ladder.at(3).second;
    if (c1 < 2 * rho32) {
        throw NotATwoSpiderError("2-legs imply more leaves than c_1 provides");
    }
    StarColumns cols;
    for (int n = 1; n <= n_cap; ++n) {
        if (n == 1) {
            cols.lambda_star.push_back(c1 - 2 * rho32);
            cols.mu_star.push_back(rho32);
        } else if (n == 2) {
            cols.lambda_star.push_back(c.lookup({2}));
            cols.mu_star.push_back(rho32);
        } else {
            cols.lambda_star.push_back(ladder.at(n).first);
            cols.mu_star.push_back(ladder.at(n).second);
        }
    }
    return cols;
}

// A star column lists leg counts by minimum order; conjugating it recovers
// the leg orders. Must be weakly decreasing with values bounded by d.
Partition column_to_legs(const std::vector<Count>& col, int d) {
    std::vector<int> parts;
    Count prev = ~Count{0};
    for (Count v : col) {
        if (v > prev || v > static_cast<Count>(d)) {
            throw NotATwoSpiderError("leg-count column is not a conjugate "
                                     "partition profile");
        }
        prev = v;
        if (v > 0) parts.push_back(static_cast<int>(v));
    }
    return conjugate(Partition(std::move(parts)));
}

ReconstructResult finish(SpiderSpec s, std::optional<CaseTag> tag, int d,
                         bool via_fallback) {
    try {
        validate_spider_spec(s);
    } catch (const InvalidSpecError& e) {
        throw NotATwoSpiderError(e.what());
    }
    if (s.order() != d) {
        throw NotATwoSpiderError("recovered legs sum to order " +
                                 std::to_string(s.order()) + ", expected " +
                                 std::to_string(d));
    }
    return {std::move(s), tag, via_fallback};
}

}  // namespace

ReconstructResult reconstruct_two_spider(const CoeffMap& c) {
    int d = c.order();
    if (d <= 9) {
        std::optional<CaseTag> tag;
        if (d >= 6) {
            try {
                tag = classify_case(c);
            } catch (const Error&) {
                // Tag is advisory below d = 10; matching decides.
            }
        }
        for (const SpiderSpec& s : all_two_spiders(d)) {
            if (coeffs_dp(build_spider(s)) == c) return {s, tag, true};
        }
        throw NotATwoSpiderError("no 2-spider of order " + std::to_string(d) +
                                 " has this coefficient map");
    }

    CaseTag tag = classify_case(c);
    Count c1 = c.lookup({1});

    if (tag.kind == CaseKind::kCaseI) {
        Count rho32 = solve_rho3(c).second;
        SpiderSpec s = rho32 == 1 ? SpiderSpec{Partition{1, 1, d - 3}, {}}
                                  : SpiderSpec{Partition{1, 1}, Partition{d - 3}};
        return finish(std::move(s), tag, d, false);
    }

    try {
        if (tag.kind == CaseKind::kCaseII) {
            int n_cap = (d + 1) / 2 - 1;
            LadderTable ladder = solve_ladder(c, n_cap);
            StarColumns cols = star_columns(c, ladder, n_cap);
            if (d % 2 == 0) {
                // A leg of order exactly d/2 is invisible to the truncated
                // columns. Two independent tests decide whether one exists.
                Count accounted = 1;
                for (int n = 1; n <= n_cap; ++n) {
                    accounted = checked_add(
                        accounted,
                        checked_add(cols.lambda_star[static_cast<std::size_t>(n - 1)],
                                    cols.mu_star[static_cast<std::size_t>(n - 1)]));
                }
                if (accounted > static_cast<Count>(d) ||
                    static_cast<Count>(d) - accounted > 1) {
                    throw NotATwoSpiderError("leg orders do not account for d");
                }
                bool leg_by_accounting = static_cast<Count>(d) - accounted == 1;
                const auto& [r1, r2] = ladder.at(n_cap);
                using Wide = __int128;
                Wide residue = static_cast<Wide>(c.lookup({n_cap, 1})) -
                               static_cast<Wide>(c1 - 1) * static_cast<Wide>(r1) -
                               static_cast<Wide>(c1 - 2) * static_cast<Wide>(r2);
                bool leg_by_residue;
                if (residue == 0) {
                    leg_by_residue = false;
                } else if (residue == static_cast<Wide>(c1) + 1) {
                    leg_by_residue = true;
                } else {
                    throw NotATwoSpiderError(
                        "c_{d/2-1,1} residue is neither 0 nor c_1+1");
                }
                if (leg_by_accounting != leg_by_residue) {
                    throw NotATwoSpiderError(
                        "d/2-leg tests disagree: order accounting says " +
                        std::string(leg_by_accounting ? "present" : "absent") +
                        ", c_{n,1} residue says " +
                        std::string(leg_by_residue ? "present" : "absent"));
                }
                if (leg_by_accounting) {
                    if ((r1 == 0) == (r2 == 0)) {
                        throw NotATwoSpiderError(
                            "d/2-leg type is not determined by rho_{d/2-1,i}");
                    }
                    cols.lambda_star.push_back(r1 > 0 ? 1 : 0);
                    cols.mu_star.push_back(r2 > 0 ? 1 : 0);
                }
            }
            SpiderSpec s{column_to_legs(cols.lambda_star, d),
                         column_to_legs(cols.mu_star, d)};
            return finish(std::move(s), tag, d, false);
        }

        // Neither case: ladder only to n = d-k-1; the long leg is the +1
        // excess there, short legs come from the corrected columns.
        int n_cap = d - tag.k - 1;
        LadderTable ladder = solve_ladder(c, n_cap);
        StarColumns cols = star_columns(c, ladder, n_cap);
        Count lN = cols.lambda_star[static_cast<std::size_t>(n_cap - 1)];
        Count mN = cols.mu_star[static_cast<std::size_t>(n_cap - 1)];
        int type;
        if (lN == 1 && mN == 0) {
            type = 1;
        } else if (lN == 0 && mN == 1) {
            type = 2;
        } else {
            throw NotATwoSpiderError(
                "long-leg excess at n=d-k-1 is not a single leg");
        }
        std::vector<Count>& column = type == 1 ? cols.lambda_star : cols.mu_star;
        for (Count& v : column) {
            if (v == 0) {
                throw NotATwoSpiderError("long leg missing from a column level");
            }
            --v;
        }
        Partition lambda = column_to_legs(cols.lambda_star, d);
        Partition mu = column_to_legs(cols.mu_star, d);
        Count short_total =
            static_cast<Count>(lambda.weight()) + static_cast<Count>(mu.weight());
        if (short_total + 1 >= static_cast<Count>(d)) {
            throw NotATwoSpiderError("short legs leave no room for the long leg");
        }
        int k = d - 1 - static_cast<int>(short_total);
        if (k != tag.k) {
            throw NotATwoSpiderError(
                "long-leg order from accounting (" + std::to_string(k) +
                ") disagrees with the case signature (" + std::to_string(tag.k) +
                ")");
        }
        SpiderSpec s = type == 1 ? SpiderSpec{lambda.with_part(k), mu}
                                 : SpiderSpec{lambda, mu.with_part(k)};
        return finish(std::move(s), tag, d, false);
    } catch (const InconsistentError& e) {
        throw NotATwoSpiderError(e.what());
    }
}

}  // namespace csf
