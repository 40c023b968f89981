#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dystil {

// FNV-1a, fixed across platforms so seed derivation and token hashing are
// stable inputs to golden files.
constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Every random decision in a run is drawn from a named substream of the root
// seed, so runs replay exactly from (root seed, mock script).
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stream_name) {
    return splitmix64(root ^ fnv1a(stream_name));
}

class RngStream {
public:
    RngStream() : engine_(0) {}
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}
    RngStream(std::uint64_t root, std::string_view stream_name)
        : engine_(derive_seed(root, stream_name)) {}

    std::mt19937_64& engine() { return engine_; }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(engine_);
    }

    double next_unit() {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        return d(engine_);
    }

    double next_gaussian(double stddev = 1.0) {
        std::normal_distribution<double> d(0.0, stddev);
        return d(engine_);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dystil
