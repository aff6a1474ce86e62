#include "circle_noise/random.hpp"

#include <cmath>
#include <numbers>

namespace circle_noise {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;
constexpr int kPhiloxRounds = 10;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
    for (int round = 0; round < kPhiloxRounds; ++round) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        std::uint32_t lo0, hi0, lo1, hi1;
        mulhilo(kPhiloxM0, ctr[0], lo0, hi0);
        mulhilo(kPhiloxM1, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

std::array<std::uint64_t, 2> random_words(SeedSpec seed, Stream stream, std::uint64_t replicate,
                                          std::uint32_t index) {
    const Philox4x32::Key key{static_cast<std::uint32_t>(seed.master_seed),
                              static_cast<std::uint32_t>(seed.master_seed >> 32)};
    const Philox4x32::Counter ctr{index, static_cast<std::uint32_t>(stream),
                                  static_cast<std::uint32_t>(replicate),
                                  static_cast<std::uint32_t>(replicate >> 32)};
    const auto out = Philox4x32::block(ctr, key);
    return {(static_cast<std::uint64_t>(out[1]) << 32) | out[0],
            (static_cast<std::uint64_t>(out[3]) << 32) | out[2]};
}

// Odd multiples of 2^-53: all exactly representable, so 0 and 1 never occur.
double to_open_unit(std::uint64_t word) {
    return static_cast<double>(((word >> 11) | 1u)) * 0x1.0p-53;
}

std::pair<double, double> standard_normal_pair(SeedSpec seed, Stream stream,
                                               std::uint64_t replicate, std::uint32_t index) {
    const auto [w0, w1] = random_words(seed, stream, replicate, index);
    const double radius = std::sqrt(-2.0 * std::log(to_open_unit(w0)));
    const double angle = 2.0 * std::numbers::pi * to_open_unit(w1);
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::pair<double, double> uniform_pair(SeedSpec seed, Stream stream, std::uint64_t replicate,
                                       std::uint32_t index) {
    const auto [w0, w1] = random_words(seed, stream, replicate, index);
    return {to_open_unit(w0), to_open_unit(w1)};
}

}  // namespace circle_noise
