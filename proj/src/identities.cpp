#include "csf/identities.hpp"

#include <sstream>

namespace csf {

namespace {

IdentityReport make_report(const CanonicalCode& code, std::string name, int n,
                           Count lhs, Count rhs) {
    return {code, std::move(name), n, lhs, rhs, lhs == rhs};
}

}  // namespace

IdentityReport check_cn1(const Tree& t, int n) {
    int d = t.order();
    if (n < 2 || 2 * n >= d - 1) {
        throw OutOfRangeError("c_{n,1} identity needs 2 <= n < (d-1)/2, got n=" +
                              std::to_string(n) + ", d=" + std::to_string(d));
    }
    CoeffMap coeffs = coeffs_dp(t);
    CensusTable census = build_census(t);
    Count c1 = census.order_total(1);
    Count rhs = 0;
    for (const auto& [key, count] : census.rows()) {
        const auto& [order, code] = key;
        if (order != n && order != n + 1) continue;
        const ClassInfo& info = census.classes().at(code);
        if (order == n) {
            if (info.c1_rooted > c1) {
                throw InconsistentError("rooted c_1 exceeds tree c_1");
            }
            rhs = checked_add(rhs, checked_mul(c1 - info.c1_rooted, count));
        } else {
            rhs = checked_add(rhs, checked_mul(info.c1_tree, count));
        }
    }
    return make_report(canonical_code(t), "cn1", n, coeffs.lookup({n, 1}), rhs);
}

IdentityReport check_c1111(const Tree& t) {
    int d = t.order();
    if (d < 6) {
        throw OutOfRangeError("c_{1,1,1,1} identity needs d >= 6, got d=" +
                              std::to_string(d));
    }
    CoeffMap coeffs = coeffs_dp(t);
    CensusTable census = build_census(t);
    Count c1 = census.order_total(1);
    Count c2 = census.order_total(2);
    Count q4 = census.order_total(4);
    Count rho31 = census.rho_named(3, 1);
    Count rho32 = census.rho_named(3, 2);
    Count rhs = binomial(c1, 4);
    rhs = checked_add(rhs, checked_mul(binomial(c1 - 1, 2), c2));
    rhs = checked_add(rhs, binomial(c2, 2));
    rhs = checked_add(rhs, checked_mul(c1 - 1, rho31));
    rhs = checked_add(rhs, checked_mul(c1 - 2, rho32));
    rhs = checked_add(rhs, q4);
    return make_report(canonical_code(t), "c1111", -1,
                       coeffs.lookup({1, 1, 1, 1}), rhs);
}

std::vector<IdentityReport> check_relations(const Tree& t) {
    std::vector<IdentityReport> out;
    int d = t.order();
    if (d < 2) return out;
    CoeffMap coeffs = coeffs_dp(t);
    CensusTable census = build_census(t);
    CanonicalCode code = canonical_code(t);
    for (int n = 1; 2 * n < d; ++n) {
        Count cn = coeffs.lookup({n});
        out.push_back(make_report(code, "cn_rho", n, cn, census.order_total(n)));
        out.push_back(
            make_report(code, "cn_rho_mirror", n, cn, census.order_total(d - n)));
    }
    if (d % 2 == 0) {
        out.push_back(make_report(code, "half", d / 2,
                                  checked_mul(2, coeffs.lookup({d / 2})),
                                  census.order_total(d / 2)));
    }
    if (d >= 3) {
        out.push_back(make_report(code, "leaf_count", -1, coeffs.lookup({1}),
                                  static_cast<Count>(t.leaf_count())));
    }
    if (d >= 4) {
        Count c1 = census.order_total(1);
        Count rhs = checked_add(binomial(c1, 2), census.rho_named(2, 1));
        out.push_back(make_report(code, "c11", -1, coeffs.lookup({1, 1}), rhs));
    }
    return out;
}

std::vector<IdentityReport> check_all(const Tree& t) {
    std::vector<IdentityReport> out = check_relations(t);
    int d = t.order();
    for (int n = 2; 2 * n < d - 1; ++n) out.push_back(check_cn1(t, n));
    if (d >= 6) out.push_back(check_c1111(t));
    return out;
}

std::pair<Count, Count> solve_rho3(const CoeffMap& c) {
    int d = c.order();
    if (d < 6) {
        throw OutOfRangeError("rho_3 recovery needs d >= 6, got d=" +
                              std::to_string(d));
    }
    Count c1 = c.lookup({1});
    Count c2 = c.lookup({2});
    Count s_raw = c.lookup({3});
    Count q_raw = c.lookup({4});
    Count edges = static_cast<Count>(d) - 1;
    // Single-cut coefficients of a genuine tree never exceed the edge count.
    if (c1 > edges || c2 > edges || s_raw > edges || q_raw > edges || c1 < 2) {
        throw InconsistentError("single-cut coefficients outside tree range");
    }
    Count s = d == 6 ? 2 * s_raw : s_raw;
    Count q4 = d == 8 ? 2 * q_raw : q_raw;
    using Wide = __int128;
    Wide k = static_cast<Wide>(c.lookup({1, 1, 1, 1}));
    k -= static_cast<Wide>(binomial(c1, 4));
    k -= static_cast<Wide>(checked_mul(binomial(c1 - 1, 2), c2));
    k -= static_cast<Wide>(binomial(c2, 2));
    k -= static_cast<Wide>(q4);
    Wide rho31 = k - static_cast<Wide>(c1 - 2) * static_cast<Wide>(s);
    Wide rho32 = static_cast<Wide>(c1 - 1) * static_cast<Wide>(s) - k;
    if (rho31 < 0 || rho32 < 0) {
        throw InconsistentError(
            "rho_3 system has no nonnegative solution; input is not a tree's "
            "coefficient map");
    }
    return {static_cast<Count>(rho31), static_cast<Count>(rho32)};
}

std::string identities_tsv(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << r.tree_code << '\t' << r.identity << '\t';
        if (r.n < 0) {
            os << '-';
        } else {
            os << r.n;
        }
        os << '\t' << r.lhs << '\t' << r.rhs << '\t'
           << (r.pass ? "pass" : "fail") << '\n';
    }
    return os.str();
}

}  // namespace csf
