#pragma once

#include <array>
#include <string>

#include "uncert/frames.hpp"

namespace uncert {

/// Per-axiom tallies for the one-sided-scaling norm axioms, gathered over
/// sampled (x, y, lambda) triples.  Axioms: definiteness, triangle
/// inequality, ||lambda x|| <= |lambda| ||x|| when |lambda| >= 1, and
/// ||lambda x|| >= |lambda| ||x|| when |lambda| <= 1.
struct DiscNormAxiomReport {
    struct AxiomTally {
        std::string axiom;
        long checked = 0;
        long failures = 0;
    };
    std::array<AxiomTally, 4> axioms;

    long total_failures() const {
        long n = 0;
        for (const auto& a : axioms) n += a.failures;
        return n;
    }
};

/// analysis = synthesis = I_d.
FramePair identity_pair(Eigen::Index d);

/// Unitary DFT pair: analysis entries exp(-2 pi i jk / n) / sqrt(n),
/// synthesis its conjugate transpose.
FramePair dft_pair(Eigen::Index n);

/// Random full-column-rank m x d analysis with complex Gaussian entries and
/// condition estimate <= cond_cap; synthesis is its pseudo-inverse (the
/// plain inverse when m = d).  Deterministic for a fixed seed; throws
/// GenerationError after 100 draws exceeding cond_cap.
FramePair random_biorthogonal_pair(Eigen::Index d, Eigen::Index m,
                                   unsigned long long seed, double cond_cap = 1e6);

/// Indicator of the arithmetic progression {offset, offset+spacing, ...};
/// spacing must divide n.  Support is n / spacing.
CVec dirac_comb(Eigen::Index n, Eigen::Index spacing, Eigen::Index offset = 0);

/// Samples vectors and scalars and verifies the four checkable axioms of
/// the inhomogeneous l^p norm on K^d for p in (0,1).
DiscNormAxiomReport check_disc_norm_axioms(const PExponent& p, Eigen::Index d,
                                           long sample_count, unsigned long long seed);

} // namespace uncert
