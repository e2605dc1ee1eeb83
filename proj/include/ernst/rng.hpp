#pragma once

#include <cstdint>
#include <random>

namespace ernst {

/// Seeded generator with an explicit uniform-double mapping, so identical
/// seeds give identical streams on every platform (std distributions are
/// implementation-defined and would break byte-stable reports).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = double(eng_() >> 11) * 0x1.0p-53;  // [0, 1)
        return lo + (hi - lo) * u;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + int(eng_() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ernst
