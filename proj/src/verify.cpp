#include "csf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "csf/enumerate.hpp"
#include "csf/identities.hpp"
#include "csf/reconstruct.hpp"
#include "csf/tree.hpp"

namespace csf {

Fingerprint fingerprint_coeffs(const CoeffMap& c) {
    const std::string bytes = c.to_json();
    unsigned __int128 h =
        (static_cast<unsigned __int128>(0x6c62272e07bb0142ULL) << 64) |
        0x62b821756295c58dULL;
    const unsigned __int128 prime =
        (static_cast<unsigned __int128>(1) << 88) | (1u << 8) | 0x3b;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= prime;
    }
    return {static_cast<std::uint64_t>(h >> 64), static_cast<std::uint64_t>(h)};
}

std::string fingerprint_hex(const Fingerprint& fp) {
    static const char* digits = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; ++i) {
        out[static_cast<std::size_t>(15 - i)] = digits[(fp.hi >> (4 * i)) & 0xf];
        out[static_cast<std::size_t>(31 - i)] = digits[(fp.lo >> (4 * i)) & 0xf];
    }
    return out;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    if (kind == "distinct") {
        os << items << " trees, " << distinct << " distinct, "
           << failures.size() << " collisions";
    } else if (kind == "spiders") {
        os << items << " specs, " << failures.size() << " mismatches";
    } else {
        os << items << " checks, " << failures.size() << " failures";
    }
    return os.str();
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["d_min"] = d_min;
    j["d_max"] = d_max;
    j["items"] = items;
    if (kind == "distinct") j["distinct"] = distinct;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [item, detail] : failures) {
        arr.push_back({{"item", item}, {"detail", detail}});
    }
    j["failures"] = std::move(arr);
    return j.dump();
}

namespace {

bool looks_like_code(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char ch) { return ch == '(' || ch == ')'; });
}

bool looks_like_fp_hex(const std::string& s) {
    if (s.size() != 32) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f');
    });
}

Fingerprint parse_fp_hex(const std::string& s) {
    auto nibble = [](char ch) -> std::uint64_t {
        return ch <= '9' ? static_cast<std::uint64_t>(ch - '0')
                         : static_cast<std::uint64_t>(ch - 'a' + 10);
    };
    Fingerprint fp;
    for (int i = 0; i < 16; ++i) {
        fp.hi = (fp.hi << 4) | nibble(s[static_cast<std::size_t>(i)]);
        fp.lo = (fp.lo << 4) | nibble(s[static_cast<std::size_t>(16 + i)]);
    }
    return fp;
}

// Loads the append-only TSV cache. Any malformed line aborts: a wrong cache
// can silently mask a collision, so nothing is skipped.
std::map<CanonicalCode, Fingerprint> load_cache(const std::string& path) {
    std::map<CanonicalCode, Fingerprint> out;
    std::ifstream in(path);
    if (!in) return out;  // absent cache starts empty
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where =
            path + ":" + std::to_string(lineno) + ": ";
        auto tab = line.find('\t');
        if (tab == std::string::npos ||
            line.find('\t', tab + 1) != std::string::npos) {
            throw CacheCorruptError(where + "expected code<TAB>fingerprint");
        }
        std::string code = line.substr(0, tab);
        std::string hex = line.substr(tab + 1);
        if (!looks_like_code(code)) {
            throw CacheCorruptError(where + "malformed canonical code");
        }
        if (!looks_like_fp_hex(hex)) {
            throw CacheCorruptError(where + "malformed fingerprint");
        }
        Fingerprint fp = parse_fp_hex(hex);
        auto [it, inserted] = out.emplace(std::move(code), fp);
        if (!inserted && !(it->second == fp)) {
            throw CacheCorruptError(where +
                                    "conflicting fingerprints for one code");
        }
    }
    return out;
}

struct DistinctItem {
    CanonicalCode code;
    Fingerprint fp;
    bool from_cache = false;
};

}  // namespace

VerifyReport verify_distinct(int d, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    if (opts.jobs < 1) throw OutOfRangeError("jobs must be >= 1");

    std::map<CanonicalCode, Fingerprint> cache;
    if (!opts.cache_path.empty()) cache = load_cache(opts.cache_path);

    FreeTreeGenerator gen(d, opts.max_order);
    std::mutex gen_mutex;
    auto work = [&]() {
        std::vector<DistinctItem> local;
        while (true) {
            std::optional<Tree> t;
            {
                std::lock_guard<std::mutex> lock(gen_mutex);
                t = gen.next();
            }
            if (!t) break;
            CanonicalCode code = canonical_code(*t);
            auto hit = cache.find(code);
            if (hit != cache.end()) {
                local.push_back({std::move(code), hit->second, true});
            } else {
                Fingerprint fp = fingerprint_coeffs(coeffs_dp(*t));
                local.push_back({std::move(code), fp, false});
            }
        }
        return local;
    };

    std::vector<std::vector<DistinctItem>> batches;
    if (opts.jobs == 1) {
        batches.push_back(work());
    } else {
        batches.resize(static_cast<std::size_t>(opts.jobs));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(opts.jobs));
        for (int i = 0; i < opts.jobs; ++i) {
            pool.emplace_back(
                [&, i]() { batches[static_cast<std::size_t>(i)] = work(); });
        }
        for (auto& th : pool) th.join();
    }

    // Merge point: order-independent, keyed by canonical code.
    std::map<CanonicalCode, Fingerprint> by_code;
    std::map<CanonicalCode, std::string> fresh;
    for (auto& batch : batches) {
        for (auto& item : batch) {
            if (!item.from_cache && !opts.cache_path.empty()) {
                fresh.emplace(item.code, fingerprint_hex(item.fp));
            }
            auto [it, inserted] = by_code.emplace(std::move(item.code), item.fp);
            if (!inserted) {
                throw InconsistentError("enumeration repeated class " +
                                        it->first);
            }
        }
    }

    std::map<Fingerprint, std::vector<CanonicalCode>> groups;
    for (const auto& [code, fp] : by_code) groups[fp].push_back(code);

    VerifyReport report;
    report.kind = "distinct";
    report.d_min = d;
    report.d_max = d;
    report.items = by_code.size();
    for (const auto& [fp, codes] : groups) {
        if (codes.size() == 1) {
            ++report.distinct;
            continue;
        }
        // Fingerprint tie: recompute the actual maps and compare in full.
        std::vector<CoeffMap> maps;
        maps.reserve(codes.size());
        for (const auto& code : codes) maps.push_back(coeffs_dp(tree_from_code(code)));
        std::vector<std::size_t> cls(codes.size());
        std::size_t n_classes = 0;
        for (std::size_t i = 0; i < codes.size(); ++i) {
            cls[i] = n_classes;
            for (std::size_t j = 0; j < i; ++j) {
                if (maps[i] == maps[j]) {
                    cls[i] = cls[j];
                    report.failures.emplace_back(codes[j], codes[i]);
                    break;
                }
            }
            if (cls[i] == n_classes) ++n_classes;
        }
        report.distinct += n_classes;
    }
    std::sort(report.failures.begin(), report.failures.end());

    if (!opts.cache_path.empty() && !fresh.empty()) {
        std::ofstream out(opts.cache_path, std::ios::app);
        if (!out) {
            throw CacheCorruptError("cannot open cache for append: " +
                                    opts.cache_path);
        }
        for (const auto& [code, hex] : fresh) out << code << '\t' << hex << '\n';
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

VerifyReport verify_spider_roundtrip(int d_min, int d_max) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.kind = "spiders";
    report.d_min = d_min;
    report.d_max = d_max;
    for (int d = d_min; d <= d_max; ++d) {
        if (d < 4) continue;  // no 2-spider has fewer than four vertices
        for (const SpiderSpec& spec : all_two_spiders(d)) {
            ++report.items;
            const std::string name = format_spider_spec(spec);
            try {
                ReconstructResult got =
                    reconstruct_two_spider(coeffs_dp(build_spider(spec)));
                if (!(got.spec == spec)) {
                    report.failures.emplace_back(
                        name, "reconstructed as " + format_spider_spec(got.spec));
                }
            } catch (const Error& e) {
                report.failures.emplace_back(name, e.what());
            }
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

VerifyReport verify_identities(int d_min, int d_max) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.kind = "identities";
    report.d_min = d_min;
    report.d_max = d_max;
    for (int d = d_min; d <= d_max; ++d) {
        if (d < 1) continue;
        FreeTreeGenerator gen(d);
        while (auto t = gen.next()) {
            for (const IdentityReport& ir : check_all(*t)) {
                ++report.items;
                if (ir.pass) continue;
                std::string what = ir.identity;
                if (ir.n >= 0) what += " n=" + std::to_string(ir.n);
                report.failures.emplace_back(ir.tree_code, std::move(what));
            }
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

}  // namespace csf
