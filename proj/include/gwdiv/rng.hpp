#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace gwdiv::rng {

// splitmix64 step (Steele/Lea/Flood mixer); used only to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ stream with the published jump polynomials. Stream layout for
// reproducible parallel runs: sweep point i gets long_jump() applied i times
// (2^192 apart), worker w within a point gets jump() applied w times (2^128
// apart). One stream per worker; nothing is shared.
class Stream {
public:
    explicit Stream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via the Marsaglia polar method (exact, no table); the
    // second variate of each accepted pair is cached.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_unit() - 1.0;
            v = 2.0 * next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * scale;
        has_spare_ = true;
        return u * scale;
    }

    // Advance 2^128 steps.
    void jump() { apply_jump({0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                              0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL}); }

    // Advance 2^192 steps.
    void long_jump() { apply_jump({0x76e15d3efefdcbbfULL, 0xc5004e441c522fb3ULL,
                                   0x77710069854ee241ULL, 0x39109bb02acbe635ULL}); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    void apply_jump(const std::array<std::uint64_t, 4>& poly) {
        std::array<std::uint64_t, 4> acc{0, 0, 0, 0};
        for (std::uint64_t word : poly) {
            for (int bit = 0; bit < 64; ++bit) {
                if (word & (1ULL << bit))
                    for (int i = 0; i < 4; ++i) acc[i] ^= s_[i];
                next_u64();
            }
        }
        s_ = acc;
        has_spare_ = false;
    }

    std::array<std::uint64_t, 4> s_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace gwdiv::rng
