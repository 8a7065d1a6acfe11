#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace halin {

/// Seeded mt19937_64 with hand-rolled bounded sampling and shuffling.
/// std::uniform_int_distribution and std::shuffle are implementation-defined,
/// so they cannot back the byte-identical-across-platforms guarantee; the
/// engine itself is fully specified by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, k) by rejection sampling.
    std::uint64_t below(std::uint64_t k) {
        assert(k > 0);
        const std::uint64_t rem = (0 - k) % k;  // 2^64 mod k
        for (;;) {
            std::uint64_t x = eng_();
            if (rem == 0 || x <= ~rem) return x % k;
        }
    }

    /// Fisher-Yates with a pinned visit order.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace halin
