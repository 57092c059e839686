#pragma once

#include <cstdint>
#include <random>

namespace sandgraph {

// SplitMix64 finalizer, used to turn (master seed, trial index) pairs into
// well-separated engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-trial stream rule: seed = splitmix64(master ^ trial). Every trial gets
// its own engine, so results do not depend on how trials are scheduled
// across worker threads.
inline std::mt19937_64 make_trial_engine(std::uint64_t master_seed, std::uint64_t trial_index) {
    return std::mt19937_64(splitmix64(master_seed ^ trial_index));
}

// Uniform double in [0,1) with 53 random bits; avoids the
// implementation-defined std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace sandgraph
