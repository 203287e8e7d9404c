#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace blockeq {

// All randomized routines take one of these. Child seeds are derived by
// label hashing so parallel schedules stay reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed), seed_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next() { return eng_(); }

    // uniform in [0, n)
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        std::uniform_int_distribution<uint64_t> d(0, n - 1);
        return d(eng_);
    }

    uint8_t fieldElement(unsigned p) { return uint8_t(below(p)); }
    uint8_t nonzeroFieldElement(unsigned p) { return uint8_t(1 + below(p - 1)); }

    Rng child(std::string_view label) const {
        uint64_t h = 1469598103934665603ull; // FNV-1a
        for (char c : label) {
            h ^= uint8_t(c);
            h *= 1099511628211ull;
        }
        h ^= seed_ + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return Rng(h);
    }

private:
    std::mt19937_64 eng_;
    uint64_t seed_;
};

} // namespace blockeq
