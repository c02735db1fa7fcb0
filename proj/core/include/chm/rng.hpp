#ifndef CHM_RNG_HPP
#define CHM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace chm {

/// Deterministic random source. The engine is std::mt19937_64 (its output
/// sequence is fixed by the standard); the floating-point draws are derived
/// here rather than through std:: distributions so that identical seeds give
/// bitwise-identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream derived from (seed, stream index); used for per-restart and
    /// per-record independence.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1)));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound).
    std::size_t index(std::size_t bound) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(bound)) % bound;
    }

    bool coin() { return (next_u64() & 1) != 0; }

    /// Standard normal via Box-Muller; second value of each pair is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        do { u = uniform(); } while (u == 0.0);
        double v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        spare_ = r * std::sin(2.0 * M_PI * v);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * v);
    }

private:
    static std::uint64_t mix(std::uint64_t x) {   // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace chm

#endif
