#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mimic/field.hpp"

namespace mimic {

struct SelftestConfig {
    uint64_t seed = 1;
    uint64_t prime = Fp::kMersenne61;
    int trials = 20;  // pipeline instances; other stages scale with it
};

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    int gammoid_rerandomizations = 0;
    bool all_passed() const;
};

// Reduced-scale run of the randomized acceptance properties: pipeline
// equivalence in both modes, size bounds, gammoid/oracle agreement,
// representative-set extension property, determinism. With trials == 0 every
// stage passes vacuously.
SelftestReport run_selftest(const SelftestConfig& config);

std::string format_selftest(const SelftestReport& report);

}  // namespace mimic
