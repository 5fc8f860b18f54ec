#pragma once

#include <cstdint>

#include "excol/common.hpp"

namespace excol {

// Counter-based generator: output i is the SplitMix64 finalizer applied to
// seed + i * golden gamma. Every random choice an algorithm makes consumes
// from one stream in documented order, so transcripts replay from the seed.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    bool next_bit() {
        if (bits_left_ == 0) {
            bit_buffer_ = next_u64();
            bits_left_ = 64;
        }
        bool b = bit_buffer_ & 1ULL;
        bit_buffer_ >>= 1;
        --bits_left_;
        return b;
    }

    // Unbiased uniform draw from [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) throw ContractError("rng: empty range");
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t u = next_u64();
            if (u >= threshold) return u % n;
        }
    }

    // Exact Bernoulli(p) for rational p: lazily compares a uniform real's
    // binary expansion against p. Terminates with probability one.
    bool bernoulli(const Rational& p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        Rational x = p;
        for (;;) {
            x *= 2;
            bool p_bit = x >= 1;
            if (p_bit) x -= 1;
            bool u_bit = next_bit();
            if (u_bit != p_bit) return p_bit;  // u_bit < p_bit means u < p
            if (x == 0) return false;
        }
    }

    std::uint64_t seed() const { return seed_; }

    // Independent stream for repetition i of a driver seeded with `seed`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        CounterRng r(seed ^ (0xD1B54A32D192ED03ULL + stream * 0xEB44ACCAB455D165ULL));
        return r.next_u64();
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    std::uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace excol
