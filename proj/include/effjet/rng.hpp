/*
 * rng.hpp
 * -------
 * Deterministic seeded randomness for property suites and probes.
 * mt19937_64 has a standard-pinned output sequence; the integer mapping
 * below avoids std::uniform_int_distribution, whose output is
 * implementation-defined. Identical seeds give identical streams on every
 * platform, which the CLI's byte-identical-report contract relies on.
 */
#pragma once

#include <cstdint>
#include <random>

#include "effjet/rational.hpp"

namespace effjet {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
    // mapping exact and portable.
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    bool chance(long num, long den) { return uniform(1, den) <= num; }

    // Small integer coefficient in [-9, 9], the box used throughout the
    // randomized suites.
    Rational small_int() { return Rational(uniform(-9, 9)); }

    Rational small_nonzero() {
        long v = 0;
        while (v == 0) v = uniform(-9, 9);
        return Rational(v);
    }

    // Derives an independent stream for a numbered sub-task (splitmix64 on
    // the pair), so parallel workers see the same values as a serial run.
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace effjet
