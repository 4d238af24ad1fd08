#pragma once

// Seeded random sources for casts.
//
// Every (seed, stream_id) pair names an independent sequence produced by the
// Philox4x32-10 counter-based generator. The 64-bit seed is the Philox key;
// the 128-bit counter is (block index, stream_id), so distinct streams never
// share a counter value and can be created in any order on any thread.

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>

#include "buffon/geometry.hpp"

namespace buffon {

struct RngConfig {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

struct Philox4x32 {
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Block generate(Block ctr, Key key) {
        constexpr std::uint32_t kMul0 = 0xD2511F53u;
        constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
        constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
        constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }
};

class Stream {
public:
    explicit Stream(RngConfig config);

    std::uint64_t next_u64() {
        if (available_ == 0) refill();
        return buffer_[2 - available_--];
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    RngConfig config() const { return config_; }

private:
    void refill() {
        const Philox4x32::Block out = Philox4x32::generate(
            {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
             static_cast<std::uint32_t>(config_.stream_id), static_cast<std::uint32_t>(config_.stream_id >> 32)},
            key_);
        ++block_;
        buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
        buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
        available_ = 2;
    }

    RngConfig config_;
    Philox4x32::Key key_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int available_ = 0;
};

// Anything that hands out uniform doubles on [0, 1). Tests substitute scripted
// sources to force particular casts.
template <typename S>
concept UniformSource = requires(S& s) {
    { s.next_double() } -> std::same_as<double>;
};

struct CastSample {
    double rotation = 0.0;
    double offset_x = 0.0;
    double offset_y = 0.0;
};

namespace detail {
// u * scale can round up to scale itself; keep the interval half-open.
inline double scale_half_open(double u, double scale) {
    const double v = u * scale;
    return v < scale ? v : std::nextafter(scale, 0.0);
}
} // namespace detail

template <UniformSource S>
double sample_rotation(S& rng) {
    return detail::scale_half_open(rng.next_double(), kTwoPi);
}

template <UniformSource S>
double sample_offset(S& rng, double spacing) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("offset spacing must be positive and finite");
    }
    return detail::scale_half_open(rng.next_double(), spacing);
}

// Draw order is fixed: rotation, offset_x, offset_y.
template <UniformSource S>
CastSample sample_cast(S& rng, double spacing) {
    CastSample c;
    c.rotation = sample_rotation(rng);
    c.offset_x = sample_offset(rng, spacing);
    c.offset_y = sample_offset(rng, spacing);
    return c;
}

} // namespace buffon
