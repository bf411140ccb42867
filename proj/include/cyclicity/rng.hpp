#pragma once

#include <cmath>
#include <cstdint>

namespace cyclicity {

// SplitMix64 run in counter mode: stream `seed` advanced by the golden-ratio
// increment. Reproducible and platform-independent (std:: distributions are
// implementation-defined, so they are not used anywhere in this project).
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // uniform over {lo, ..., hi} inclusive
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double sign() { return (next_u64() & 1) ? 1.0 : -1.0; }

    // log-uniform in [lo, hi], both positive
    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform() * std::log(hi / lo));
    }

  private:
    std::uint64_t state_;
};

}  // namespace cyclicity
