// Acceptance gate: each criterion prints exactly one PASS/FAIL line and the
// process exits nonzero if any criterion fails. Criteria are independent; a
// throw inside one is caught and reported as its failure reason.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "csf/census.hpp"
#include "csf/coeffs.hpp"
#include "csf/enumerate.hpp"
#include "csf/identities.hpp"
#include "csf/reconstruct.hpp"
#include "csf/tree.hpp"
#include "csf/verify.hpp"
#include "support/oracles.hpp"

namespace {

int g_failures = 0;

void criterion(int n, const std::string& desc,
               const std::function<void()>& body) {
    try {
        body();
        std::cout << "criterion " << n << ": PASS - " << desc << std::endl;
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "criterion " << n << ": FAIL - " << desc << " ("
                  << e.what() << ")" << std::endl;
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

std::string describe(int d, const csf::Tree& t) {
    std::ostringstream os;
    os << "order " << d << ", tree " << csf::canonical_code(t);
    return os.str();
}

}  // namespace

int main() {
    using namespace csf;

    criterion(1, "4-leaf star has the exact coefficient table and rendering", [] {
        Tree star = Tree::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        CoeffMap c = coeffs_dp(star);
        require(c.at({4}) == 1 && c.at({3, 1}) == 3 && c.at({2, 2}) == 0 &&
                    c.at({2, 1, 1}) == 3 && c.at({1, 1, 1, 1}) == 1,
                "coefficient table is wrong");
        require(render_power_sum_polynomial(c) ==
                    "p_1^4-3p_1^2p_2+3p_1p_3-p_4",
                "rendered polynomial is wrong");
        require(coeffs_naive(star) == c, "engines disagree on the star");
    });

    criterion(2,
              "subset DP equals exhaustive enumeration on all trees through "
              "order 11 and on 100 seeded random trees through order 18",
              [] {
        int seen = 0;
        for (int d = 1; d <= 11; ++d) {
            for (const Tree& t : all_trees(d)) {
                ++seen;
                require(coeffs_dp(t) == coeffs_naive(t), describe(d, t));
            }
        }
        require(seen == 436, "exhaustive sweep visited the wrong tree count");
        std::mt19937_64 rng(20240816);
        for (int i = 0; i < 100; ++i) {
            int d = 12 + i % 7;
            Tree t = oracles::random_tree(rng, d);
            require(coeffs_dp(t) == coeffs_naive(t),
                    "random " + describe(d, t));
        }
    });

    criterion(3, "every stated coefficient identity holds on every tree of "
                 "order 2 through 12", [] {
        for (int d = 2; d <= 12; ++d) {
            for (const Tree& t : all_trees(d)) {
                for (const IdentityReport& r : check_all(t)) {
                    require(r.pass, r.identity + " fails on " + describe(d, t));
                }
            }
        }
    });

    criterion(4, "(rho_{3,1}, rho_{3,2}) recovered from coefficients matches "
                 "the rooted census on every tree of order 6 through 12", [] {
        for (int d = 6; d <= 12; ++d) {
            for (const Tree& t : all_trees(d)) {
                CensusTable cen = build_census(t);
                auto [r31, r32] = solve_rho3(coeffs_dp(t));
                require(r31 == cen.rho_named(3, 1) &&
                            r32 == cen.rho_named(3, 2),
                        describe(d, t));
            }
        }
    });

    criterion(5, "every 2-spider of order 4 through 18 reconstructs to its "
                 "own signature from coefficients alone", [] {
        VerifyReport rep = verify_spider_roundtrip(4, 18);
        require(rep.items == 4262, "wrong signature count: " + rep.summary());
        require(rep.pass(), rep.summary());
    });

    criterion(6, "coefficient maps separate all non-isomorphic trees of each "
                 "order 1 through 18", [] {
        for (int d = 1; d <= 18; ++d) {
            VerifyReport rep = verify_distinct(d);
            require(rep.pass(),
                    "order " + std::to_string(d) + ": " + rep.summary());
        }
    });

    criterion(7, "the order-9 spider 1,2,5; has c_3 = 1 < c_4 = 2 and "
                 "classifies as neither, k=5", [] {
        CoeffMap c = coeffs_dp(build_spider(parse_spider_spec("1,2,5;")));
        require(c.lookup({3}) == 1, "c_3 is wrong");
        require(c.lookup({4}) == 2, "c_4 is wrong");
        CaseTag tag = classify_case(c);
        require(tag.kind == CaseKind::kCaseNeither && tag.k == 5,
                "classified as " + format_case_tag(tag));
    });

    criterion(8, "tree generators match independent Pruefer-sequence and "
                 "root-everywhere oracles", [] {
        for (int d = 1; d <= 9; ++d) {
            std::set<CanonicalCode> got;
            for (const Tree& t : all_trees(d)) got.insert(canonical_code(t));
            require(got == oracles::pruefer_free_codes(d),
                    "free classes differ at order " + std::to_string(d));
        }
        require(all_trees(10).size() == 106, "wrong class count at order 10");
        for (int n = 1; n <= 7; ++n) {
            std::set<CanonicalCode> got;
            for (const RootedTree& r : all_rooted_trees(n)) {
                got.insert(rooted_canonical_code(r));
            }
            require(got == oracles::rooted_codes_by_rooting(n),
                    "rooted classes differ at order " + std::to_string(n));
        }
    });

    criterion(9, "verification reports are byte-identical across job counts "
                 "and cache states", [] {
        VerifyReport base = verify_distinct(9);
        const std::string cache = "/tmp/csf_acceptance_cache_d9.tsv";
        std::remove(cache.c_str());
        VerifyOptions cold_opts;
        cold_opts.cache_path = cache;
        VerifyReport cold = verify_distinct(9, cold_opts);
        VerifyOptions warm_opts;
        warm_opts.cache_path = cache;
        warm_opts.jobs = 4;
        VerifyReport warm = verify_distinct(9, warm_opts);
        VerifyOptions threaded_opts;
        threaded_opts.jobs = 4;
        VerifyReport threaded = verify_distinct(9, threaded_opts);
        std::remove(cache.c_str());
        require(base.pass(), base.summary());
        for (const VerifyReport* r : {&cold, &warm, &threaded}) {
            require(r->to_json() == base.to_json(),
                    "serialized reports differ");
            require(r->summary() == base.summary(), "summaries differ");
        }
    });

    if (g_failures > 0) {
        std::cout << g_failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
