#include "csf/coeffs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace csf {

CoeffMap::CoeffMap(int order) : order_(order) {
    if (order < 1) throw OrderTooLargeError("order must be at least 1");
    if (order > kMaxTreeOrder) {
        throw OrderTooLargeError("order " + std::to_string(order) +
                                 " exceeds the exact-count bound " +
                                 std::to_string(kMaxTreeOrder));
    }
}

void CoeffMap::add(const Partition& full, Count c) {
    if (full.weight() != order_) {
        throw InconsistentError("coefficient key must be a partition of " +
                                std::to_string(order_));
    }
    if (c == 0) return;
    Count& slot = entries_[full];
    slot = checked_add(slot, c);
}

Count CoeffMap::at(const Partition& full) const {
    auto it = entries_.find(full);
    return it == entries_.end() ? 0 : it->second;
}

Count CoeffMap::lookup(const Partition& reduced) const {
    int w = reduced.weight();
    if (w >= order_) {
        throw WeightTooLargeError("reduced partition weight " +
                                  std::to_string(w) + " must be below " +
                                  std::to_string(order_));
    }
    return at(reduced.with_part(order_ - w));
}

void CoeffMap::validate() const {
    std::array<Count, kMaxTreeOrder + 1> row_sum{};
    for (const auto& [p, c] : entries_) {
        if (c == 0) throw InconsistentError("stored zero count");
        row_sum[static_cast<std::size_t>(p.length())] =
            checked_add(row_sum[static_cast<std::size_t>(p.length())], c);
    }
    if (at(Partition{order_}) != 1) throw InconsistentError("empty cut != 1");
    if (at(Partition(std::vector<int>(static_cast<std::size_t>(order_), 1))) !=
        1) {
        throw InconsistentError("full cut != 1");
    }
    for (int l = 1; l <= order_; ++l) {
        Count expect = binomial(static_cast<Count>(order_ - 1),
                                static_cast<Count>(l - 1));
        if (row_sum[static_cast<std::size_t>(l)] != expect) {
            throw InconsistentError("length-" + std::to_string(l) +
                                    " row sum mismatch");
        }
    }
}

std::string CoeffMap::to_json() const {
    nlohmann::ordered_json j;
    j["d"] = order_;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [p, c] : entries_) {
        nlohmann::ordered_json e;
        e["partition"] = p.parts();
        e["count"] = std::to_string(c);
        j["entries"].push_back(std::move(e));
    }
    return j.dump();
}

CoeffMap CoeffMap::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("d") || !j.contains("entries") ||
        !j["d"].is_number_integer() || !j["entries"].is_array()) {
        throw FormatError("expected {\"d\":..., \"entries\":[...]}");
    }
    long long d = j["d"].get<long long>();
    if (d < 1) throw FormatError("d must be positive");
    if (d > kMaxTreeOrder) {
        throw OrderTooLargeError("d " + std::to_string(d) +
                                 " exceeds the exact-count bound");
    }
    CoeffMap c(static_cast<int>(d));
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("partition") || !e.contains("count") ||
            !e["partition"].is_array()) {
            throw FormatError("entry needs \"partition\" and \"count\"");
        }
        std::vector<int> parts;
        for (const auto& x : e["partition"]) {
            if (!x.is_number_integer()) throw FormatError("non-integer part");
            long long p = x.get<long long>();
            if (p < 1 || p > d) throw FormatError("part out of range");
            parts.push_back(static_cast<int>(p));
        }
        Partition p(std::move(parts));
        if (p.weight() != d) {
            throw FormatError("partition [" + p.str() + "] is not of weight " +
                              std::to_string(d));
        }
        Count count = 0;
        if (e["count"].is_string()) {
            const std::string s = e["count"].get<std::string>();
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
                throw FormatError("count must be a decimal string");
            }
            try {
                count = std::stoull(s);
            } catch (const std::out_of_range&) {
                throw OverflowError("count " + s + " exceeds 64 bits");
            }
        } else if (e["count"].is_number_unsigned() ||
                   (e["count"].is_number_integer() &&
                    e["count"].get<long long>() >= 0)) {
            count = e["count"].get<std::uint64_t>();
        } else {
            throw FormatError("count must be a decimal string");
        }
        if (c.at(p) != 0) throw FormatError("duplicate partition [" + p.str() + "]");
        c.add(p, count);
    }
    return c;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    std::vector<int> size;
    explicit Dsu(int n)
        : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) {
            std::swap(a, b);
        }
        parent[static_cast<std::size_t>(b)] = a;
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    }
};

using Key = unsigned __int128;

struct KeyHash {
    std::size_t operator()(Key k) const {
        std::uint64_t x = static_cast<std::uint64_t>(k) ^
                          (static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

using Table = std::unordered_map<Key, Count, KeyHash>;

// Packs (multiset of completed part sizes, root-component size) into 128
// bits: one field per part size k with room for the maximum multiplicity
// floor((d-1)/k), then the root size on top. Completed parts never cover the
// root vertex, so multiplicities cannot overflow their fields and two keys
// can be merged by plain addition.
struct KeyLayout {
    int d;
    int root_offset = 0;
    std::array<int, kMaxTreeOrder> offset{};
    std::array<int, kMaxTreeOrder> width{};

    explicit KeyLayout(int order) : d(order) {
        int off = 0;
        for (int k = 1; k < d; ++k) {
            offset[static_cast<std::size_t>(k)] = off;
            width[static_cast<std::size_t>(k)] =
                std::bit_width(static_cast<unsigned>((d - 1) / k));
            off += width[static_cast<std::size_t>(k)];
        }
        root_offset = off;
        off += std::bit_width(static_cast<unsigned>(d));
        if (off > 128) {
            throw OrderTooLargeError("DP key layout exceeds 128 bits");
        }
    }

    Key part_unit(int k) const {
        return Key{1} << offset[static_cast<std::size_t>(k)];
    }
    Key root_unit() const { return Key{1} << root_offset; }
    int root_of(Key k) const {
        return static_cast<int>(static_cast<std::uint64_t>(k >> root_offset));
    }
    // Closed parts in the key, decoded in descending size order.
    std::vector<int> parts_of(Key k) const {
        std::vector<int> parts;
        for (int sz = d - 1; sz >= 1; --sz) {
            auto mult = static_cast<std::uint64_t>(
                            k >> offset[static_cast<std::size_t>(sz)]) &
                        ((std::uint64_t{1} << width[static_cast<std::size_t>(sz)]) - 1);
            for (std::uint64_t i = 0; i < mult; ++i) parts.push_back(sz);
        }
        return parts;
    }
};

// Table at the root after the bottom-up pass; the root component is still
// open (held in the root field of each key).
Table dp_root_table(const Tree& t, int root, const KeyLayout& layout) {
    int d = t.order();
    std::vector<int> parent(static_cast<std::size_t>(d), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(d));
    order.push_back(root);
    parent[static_cast<std::size_t>(root)] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : t.neighbors(order[i])) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
        }
    }
    parent[static_cast<std::size_t>(root)] = -1;

    std::vector<Table> table(static_cast<std::size_t>(d));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        Table tv;
        tv[layout.root_unit()] = 1;  // bare vertex: root component of size 1
        for (int c : t.neighbors(v)) {
            if (c == parent[static_cast<std::size_t>(v)]) continue;
            Table& tc = table[static_cast<std::size_t>(c)];
            Table merged;
            merged.reserve(tv.size() * tc.size());
            for (const auto& [kc, cc] : tc) {
                int rc = layout.root_of(kc);
                Key cut_delta = kc - static_cast<Key>(rc) * layout.root_unit() +
                                layout.part_unit(rc);
                for (const auto& [kp, cp] : tv) {
                    Count prod = checked_mul(cp, cc);
                    Count& keep = merged[kp + kc];
                    keep = checked_add(keep, prod);
                    Count& cut = merged[kp + cut_delta];
                    cut = checked_add(cut, prod);
                }
            }
            tv = std::move(merged);
            tc.clear();
        }
        table[static_cast<std::size_t>(v)] = std::move(tv);
    }
    return std::move(table[static_cast<std::size_t>(root)]);
}

void check_dp_order(int d, int max_order) {
    if (max_order > kMaxTreeOrder) max_order = kMaxTreeOrder;
    if (d > max_order) {
        throw OrderTooLargeError("order " + std::to_string(d) +
                                 " exceeds DP limit " + std::to_string(max_order));
    }
}

}  // namespace

CoeffMap coeffs_naive(const Tree& t) {
    int d = t.order();
    if (d > kNaiveMaxOrder) {
        throw OrderTooLargeError("order " + std::to_string(d) +
                                 " exceeds naive limit " +
                                 std::to_string(kNaiveMaxOrder));
    }
    CoeffMap out(d);
    const auto& edges = t.edges();
    int m = d - 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        Dsu dsu(d);
        for (int i = 0; i < m; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                dsu.unite(edges[static_cast<std::size_t>(i)].first,
                          edges[static_cast<std::size_t>(i)].second);
            }
        }
        std::vector<int> sizes;
        for (int v = 0; v < d; ++v) {
            if (dsu.find(v) == v) sizes.push_back(dsu.size[static_cast<std::size_t>(v)]);
        }
        out.add(Partition(std::move(sizes)), 1);
    }
    return out;
}

CoeffMap coeffs_dp(const Tree& t, int max_order) {
    check_dp_order(t.order(), max_order);
    KeyLayout layout(t.order());
    Table top = dp_root_table(t, 0, layout);
    CoeffMap out(t.order());
    for (const auto& [k, c] : top) {
        std::vector<int> parts = layout.parts_of(k);
        parts.push_back(layout.root_of(k));
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

CutProfile rooted_cut_profile(const RootedTree& r, int max_order) {
    check_dp_order(r.tree.order(), max_order);
    if (r.root < 0 || r.root >= r.tree.order()) {
        throw BadLabelError("root out of range");
    }
    KeyLayout layout(r.tree.order());
    Table top = dp_root_table(r.tree, r.root, layout);
    CutProfile out;
    for (const auto& [k, c] : top) {
        Count& slot = out[Partition(layout.parts_of(k))];
        slot = checked_add(slot, c);
    }
    return out;
}

std::string render_power_sum_polynomial(const CoeffMap& c) {
    // (length, parts ascending, count), longest first.
    std::vector<std::pair<std::vector<int>, Count>> terms;
    for (const auto& [p, count] : c.entries()) {
        std::vector<int> asc(p.parts().rbegin(), p.parts().rend());
        terms.emplace_back(std::move(asc), count);
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) {
            return a.first.size() > b.first.size();
        }
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [parts, count] : terms) {
        bool negative = (c.order() - static_cast<int>(parts.size())) % 2 != 0;
        if (negative) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (count != 1) os << count;
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            os << "p_" << parts[i];
            if (j - i > 1) os << '^' << (j - i);
            i = j;
        }
    }
    return os.str();
}

}  // namespace csf
