#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "heavenly/jet.hpp"

namespace heavenly {

/// Deterministic sampling helpers on top of mt19937_64. Distributions are
/// implemented by hand so identical seeds give identical streams on every
/// platform (std::uniform_real_distribution is not pinned by the standard).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// uniform in [0,1)
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// uniform in [-1,1)
    double symmetric() { return 2.0 * unit() - 1.0; }

    /// uniform integer in [lo, hi]
    long long int_in(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(engine_() % span);
    }

    /// uniform on the unit disk |z| <= 1 (polar, no rejection)
    Complex unit_disk() {
        const double r = std::sqrt(unit());
        const double th = 2.0 * M_PI * unit();
        return {r * std::cos(th), r * std::sin(th)};
    }

    /// point in the complex polydisk |x^mu| <= 1
    Point4 polydisk_point() {
        Point4 p;
        for (auto& z : p) z = unit_disk();
        return p;
    }

    /// exact small rational: |num| <= maxAbs, 1 <= den <= maxAbs
    std::pair<long long, long long> small_rational(int maxAbs = 9, bool nonzero = true) {
        long long num = int_in(-maxAbs, maxAbs);
        while (nonzero && num == 0) num = int_in(-maxAbs, maxAbs);
        const long long den = int_in(1, maxAbs);
        return {num, den};
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace heavenly
