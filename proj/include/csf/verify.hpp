#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csf/coeffs.hpp"

namespace csf {

// 128-bit FNV-1a digest of a coefficient map's canonical JSON form.
// Equal maps hash equal; unequal maps that happen to collide are caught by
// a full comparison before anything is reported.
struct Fingerprint {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint_coeffs(const CoeffMap& c);

// 32 lowercase hex digits, high word first.
std::string fingerprint_hex(const Fingerprint& fp);

struct VerifyOptions {
    int jobs = 1;
    std::string cache_path;  // empty disables the fingerprint cache
    int max_order = 20;      // desk-scale ceiling for verify_distinct
};

// One verification sweep. failures holds (item, detail) pairs: colliding
// code pairs for "distinct", (spec, reason) for "spiders", (code, identity)
// for "identities". wall_seconds is informational and never serialized, so
// reports are byte-stable across job counts and cache states.
struct VerifyReport {
    std::string kind;  // "distinct" | "spiders" | "identities"
    int d_min = 0;
    int d_max = 0;
    Count items = 0;
    Count distinct = 0;  // meaningful for kind "distinct" only
    std::vector<std::pair<std::string, std::string>> failures;
    double wall_seconds = 0.0;

    bool pass() const { return failures.empty(); }
    std::string summary() const;
    std::string to_json() const;
};

// Streams every tree of order d, fingerprints its coefficient map (cache
// hits skip the computation), and full-compares any fingerprint group of
// size > 1. Reported collisions are genuinely equal maps on distinct trees.
VerifyReport verify_distinct(int d, const VerifyOptions& opts = {});

// build -> coefficients -> reconstruct -> compare, for every 2-spider of
// each order in [d_min, d_max]. Empty range gives an empty pass report.
VerifyReport verify_spider_roundtrip(int d_min, int d_max);

// Runs every applicable coefficient identity on every tree of each order
// in [d_min, d_max].
VerifyReport verify_identities(int d_min, int d_max);

}  // namespace csf
