#pragma once

#include <cstdint>

namespace mimic {

// splitmix64 finalizer; used to derive independent per-stage seeds from one
// master seed so that runs are reproducible end to end.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t tag) {
    return mix64(base ^ mix64(tag));
}

inline uint64_t derive_seed(uint64_t base, uint64_t tag, uint64_t sub) {
    return derive_seed(derive_seed(base, tag), sub);
}

}  // namespace mimic
