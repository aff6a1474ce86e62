#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace circle_noise {

/// Philox4x32-10 counter-based generator, bit-compatible with Random123.
/// Stateless: each (counter, key) maps to an independent 128-bit block.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter counter, Key key);
};

/// Disjoint substreams drawn from one master seed.
enum class Stream : std::uint32_t {
    noise = 0,
    cholesky = 1,
    identity_points = 2,
};

/// Master seed. A draw is addressed by (stream, replicate, index), so results
/// do not depend on evaluation order or thread count.
struct SeedSpec {
    std::uint64_t master_seed = 42;

    friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// Two raw 64-bit words for the given address.
std::array<std::uint64_t, 2> random_words(SeedSpec seed, Stream stream, std::uint64_t replicate,
                                          std::uint32_t index);

/// Uniform on the open interval (0, 1): odd multiples of 2^-53.
double to_open_unit(std::uint64_t word);

/// Two independent N(0, 1) draws via Box-Muller.
std::pair<double, double> standard_normal_pair(SeedSpec seed, Stream stream,
                                               std::uint64_t replicate, std::uint32_t index);

/// Two independent U(0, 1) draws.
std::pair<double, double> uniform_pair(SeedSpec seed, Stream stream, std::uint64_t replicate,
                                       std::uint32_t index);

}  // namespace circle_noise
