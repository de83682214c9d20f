#pragma once
// Small hand-rolled generators for the property tests.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gl6/charalg.hpp"
#include "gl6/isobaric.hpp"

namespace gl6::testgen {

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    bool coin() { return uniform(0, 1) == 1; }

    std::complex<double> nonzero_complex() { return std::polar(real(0.5, 2.0), real(-3.14159, 3.14159)); }

    /// Exponents drawn from [-spread, spread]; small spreads force coincidences.
    Character character(const BasisPtr& basis, int spread = 2) {
        Exponents e;
        for (std::size_t i = 0; i < basis->size(); ++i) e.push_back(uniform(-spread, spread));
        return Character(basis, e);
    }

    LocalParameter parameter(const BasisPtr& basis, int degree, int spread = 2) {
        std::vector<Character> v;
        for (int i = 0; i < degree; ++i) v.push_back(character(basis, spread));
        return LocalParameter(basis, std::move(v));
    }
};

}  // namespace gl6::testgen
