#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ismt/instance.hpp"

namespace ismt {

// splitmix64 (Steele/Lea/Flood). Chosen over the standard library engines
// because its output is pinned by the algorithm itself, so the same seed
// yields the same instance on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 random bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform-ish in [0,bound); the modulo bias is irrelevant here, the
    // point is a portable deterministic stream
    int next_below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

private:
    std::uint64_t state_;
};

enum class GenKind {
    Euclidean,  // points in the unit square, pairwise distances
    Random,     // uniform weights in [1,2], then metric closure
    OneTwo,     // each weight 1 or 2 with probability 1/2
};

struct GenSpec {
    GenKind kind = GenKind::Euclidean;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
};

const char* gen_kind_name(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view name);

// Deterministic instance construction: weights first, then a seeded shuffle
// whose first k entries become the terminals. Throws SpecInvalid unless
// n >= 3 and 1 <= k <= n-2.
Instance generate(const GenSpec& spec);

}  // namespace ismt
