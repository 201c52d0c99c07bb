#ifndef OBELISK_GEN_HPP
#define OBELISK_GEN_HPP

#include "obelisk/constructive.hpp"

#include <cstdint>

namespace obelisk {

/// splitmix64 with the standard constants, spelled out so generated
/// instances are byte-stable across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); the modulo bias is immaterial at desk scale.
    uint64_t below(uint64_t n) { return next() % n; }

private:
    uint64_t state_;
};

/// Random oriented tree on vertices 1..n: each vertex picks an earlier
/// parent and a coin decides the arc direction.
OrientedGraph gen_tree(int n, uint64_t seed);

/// Random orientation of the n-cycle on vertices 1..n.
OrientedGraph gen_cycle(int n, uint64_t seed);

/// The directed n-cycle 1 -> 2 -> ... -> n -> 1.
OrientedGraph gen_dicycle(int n);

/// Random strictly uni-dicyclic graph on vertices 1..n: a directed cycle of
/// random length in [cycle_min, min(cycle_max, n)] with the remaining
/// vertices hung off it as random tree arcs.
OrientedGraph gen_unidicyclic(int n, uint64_t seed, int cycle_min = 3, int cycle_max = 6);

/// Random sink-fountain spec: dipath 1..spine_len, each vertex carrying a
/// random attachment of 1..max_tree vertices (arcs at the root forced
/// inward, at least one attachment non-trivial).
FountainSpec gen_fountain_spec(int spine_len, uint64_t seed, int max_tree = 5);

} // namespace obelisk

#endif
