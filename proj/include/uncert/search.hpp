#pragma once

#include <utility>

#include "uncert/uncertainty.hpp"

namespace uncert {

enum class SearchStrategy { combs, exhaustive_supports, random_restarts };

const char* strategy_name(SearchStrategy s);

/// Result of an extremal search for the smallest support product.
/// min_product can sit strictly above the bound (bounds may be slack);
/// it can never certify anything below it.
struct SearchOutcome {
    CVec minimizer;
    long min_product;
    double bound; // 1/(c_f_omega * c_g_tau)
    bool tight;   // min_product <= bound * (1 + 1e-9)
    long candidates_examined;
    SearchStrategy strategy;
};

/// Outcome of scanning square DFT minors for singularity.
struct MinorReport {
    Eigen::Index n;
    Eigen::Index max_size_checked;
    bool singular_minor_found;
    std::optional<std::pair<std::vector<Eigen::Index>, std::vector<Eigen::Index>>> witness;
    double min_abs_det_seen;
    bool sampled; // enumeration exceeded the budget and fell back to sampling
    long minors_checked;
};

struct SweepRow {
    Eigen::Index n;
    double p;
    double discup_bound;
    long min_product_found;
    double slack; // min_product_found / discup_bound
    bool n_is_prime;
};

/// Searches for the smallest supp(theta_f x) * supp(theta_g x) over nonzero x.
///
/// combs walks every Dirac comb (spacing, offset) in the ambient dimension;
/// exhaustive_supports enumerates support sets up to size 6 (ambient dim
/// capped at 12) and samples 32 generic coefficient vectors per set, an
/// upper-bound heuristic for the set's true minimal product;
/// random_restarts draws `budget` sparse random vectors.
///
/// Deterministic for fixed (strategy, budget, seed): every candidate's RNG
/// is derived from (seed, candidate index) and the reduction takes the
/// smallest product with ties broken by lexicographically smallest support.
/// Candidates are evaluated in parallel up to max_threads (0 = hardware).
SearchOutcome min_uncertainty_product(const FramePair& f_pair, const FramePair& g_pair,
                                      SearchStrategy strategy, long budget,
                                      unsigned long long seed,
                                      const SupportPolicy& policy = SupportPolicy{},
                                      unsigned max_threads = 0);

/// Enumerates square minors of the n-point DFT (unit-magnitude entries,
/// no 1/sqrt(n) scaling) up to max_size, flagging |det| below the
/// size-scaled singularity threshold 1e-10 * sqrt(size!).  Falls back to
/// a seeded random sample when the minor count exceeds 10^6.
MinorReport tao_minor_check(Eigen::Index n, Eigen::Index max_size);

/// Gap between the identity-vs-DFT product bound n^p and the minimal
/// product found, across dimensions and exponents; rows carry a
/// primality label.
std::vector<SweepRow> tightness_sweep(const std::vector<Eigen::Index>& n_list,
                                      const std::vector<double>& p_grid,
                                      SearchStrategy strategy, unsigned long long seed,
                                      const SupportPolicy& policy = SupportPolicy{});

bool is_prime(Eigen::Index n);

} // namespace uncert
