#pragma once
// The acceptance checks, shared by the `all` subcommand and the acceptance
// test binary. Each group returns named records; names are prefixed with the
// group number so sorting keeps groups together.

#include <cstdint>
#include <string>
#include <vector>

#include "gl6/hecke.hpp"

namespace gl6 {

struct CheckRecord {
    std::string name;
    std::string tag;  // area: identity, galois, lemma, arch, hecke
    bool passed = false;
    std::string detail;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    int nmax = 24;
    /// Root-of-unity sweep order for the power-sum lemma.
    int order = 6;
    int embeddings = 100;
    int convolution_samples = 500;
    int convolution_max_degree = 8;
    std::int64_t lemma_random_samples = 100'000;
    std::int64_t claim_triples = 1'000'000;
};

inline constexpr int kSuiteGroups = 9;

/// Group k in 1..kSuiteGroups:
///  1 exterior cube of a GL(2) x GL(3) product, symbolic and numeric
///  2 exterior powers of isobaric sums (convolution)
///  3 Clebsch-Gordan, cube of a sum, twist-pair and cubic self-twist sym^3
///  4 finite-group oracle against the decision rules
///  5 adjoint-square, A^4 and exterior-square identities over GL(2,3), SL(2,3)
///  6 power-sum cube lemma sweeps and the auxiliary claim
///  7 archimedean parameters
///  8 conductor and reference constants
///  9 Hecke tables against the Euler factor bridge, witness search
std::vector<CheckRecord> run_group(int k, const SuiteOptions& opt);

/// All groups, run concurrently, records sorted by name.
std::vector<CheckRecord> run_suite(const SuiteOptions& opt);

/// Synthetic tables built in code: a level-5 weight-4 GL2 table over Q and a
/// level-89 GL3 table over Q(i) with a_7 = 1+i against a_7 = 3 as the first
/// non-real value; `all_real` drops every imaginary part.
HeckeTable synthetic_gl2_table(std::uint64_t seed);
HeckeTable synthetic_gl3_table(std::uint64_t seed, bool all_real);

}  // namespace gl6
