#pragma once

#include <rf/rational.hpp>

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace rf {

// splitmix64 finaliser; used to derive independent per-cell / per-attempt seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded generator with platform-independent derived distributions
// (the std:: distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound);
        while (true) {
            std::uint64_t x = engine_();
            if (x < limit)
                return x % bound;
        }
    }

    bool bernoulli(const Rational & p);

    template <typename T>
    void shuffle(std::span<T> xs)
    {
        for (std::size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rf
