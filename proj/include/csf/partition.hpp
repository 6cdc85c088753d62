#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "csf/errors.hpp"

namespace csf {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    // Accepts parts in any order; sorts them decreasing. Rejects parts < 1.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw InvalidSpecError("partition parts must be positive");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    // Copy with one extra part inserted in order.
    Partition with_part(int p) const {
        if (p < 1) throw InvalidSpecError("partition parts must be positive");
        Partition q(*this);
        auto it = std::lower_bound(q.parts_.begin(), q.parts_.end(), p, std::greater<>());
        q.parts_.insert(it, p);
        return q;
    }

    auto operator<=>(const Partition&) const = default;

    // "4,2,1,1"; empty partition renders as "".
    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

// Conjugate (transpose of the Young diagram).
inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts()) {
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(out));
}

// All partitions of n with every part >= min_part, in decreasing lex order.
inline std::vector<Partition> partitions_of(int n, int min_part = 1) {
    std::vector<Partition> result;
    if (n < 0) return result;
    if (n == 0) {
        result.emplace_back();
        return result;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            result.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= min_part; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return result;
}

}  // namespace csf
