// Seeded deterministic randomness.  mt19937_64 output is fixed by the
// standard; the bounded draw is hand-rolled (rejection sampling) because
// std::uniform_int_distribution is implementation-defined and would break
// cross-platform reproducibility.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace kex {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi_inclusive) {  // uniform in [lo, hi]
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
    }

    double unit() {  // uniform in [0,1)
        return (eng_() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {  // Fisher–Yates
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // identity-based permutation of {0..k-1}
    std::vector<int> permutation(int k) {
        std::vector<int> p(k);
        for (int i = 0; i < k; i++) p[i] = i;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace kex
