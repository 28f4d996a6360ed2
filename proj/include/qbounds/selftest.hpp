#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qbounds {

struct SelftestCheck {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    /// First few failure descriptions.
    std::vector<std::string> failures;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool ok() const;
    /// One line per check plus a summary; byte-identical across runs.
    std::string format() const;
};

/// Runs the invariant suite. The fixture directory must contain
/// manifest.json and the code files it lists. Seeded, so deterministic.
SelftestReport run_selftest(const std::filesystem::path& fixture_dir, std::uint64_t seed = 20240601);

/// Exhaustive sphere-packing check over every additive mixed code with
/// total length <= max_total and at most max_restricted restricted
/// coordinates. Returns (codes checked, violations).
std::pair<std::uint64_t, std::uint64_t> mixed_packing_sweep(unsigned max_total, unsigned max_restricted);

}  // namespace qbounds
