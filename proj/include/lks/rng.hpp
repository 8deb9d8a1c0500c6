#pragma once

#include <cstdint>
#include <vector>

#include "lks/rational.hpp"

namespace lks {

// splitmix64 stream. Self-contained so artifacts are identical across
// standard libraries; std distributions are not portable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), rejection sampled.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t r;
        do { r = next(); } while (r >= limit);
        return r % n;
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Exact Bernoulli(p) for rational p in [0,1]: draw < p * 2^64.
    bool bernoulli(const Rat& p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        Int threshold = (numerator(p) << 64) / denominator(p);
        return Int(next()) < threshold;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    // Independent child stream, e.g. one per batch trial.
    Rng child(std::uint64_t index) const {
        Rng base(state_ ^ (0xd1b54a32d192ed03ULL * (index + 1)));
        base.next();
        return base;
    }

  private:
    std::uint64_t state_;
};

}  // namespace lks
