#pragma once

#include <optional>

#include "uncert/frames.hpp"

namespace uncert {

enum class TheoremId { RT, MT, UUP, DISCUP, FI, SI };

const char* theorem_name(TheoremId id);

/// One verified inequality: lhs >= bound, with additive comparison slack
/// 1e-12 * max(1, |bound|) because lhs is exact (integer-derived) while the
/// bound carries rounding from pow.
struct UncertaintyReport {
    TheoremId theorem_id;
    double lhs;
    double bound;
    bool holds;
    double slack_ratio; // lhs / bound
    std::array<Eigen::Index, 2> supports;
    std::optional<double> p;
};

/// The full Hilbert-space chain on support counts a, b:
/// (a^2+b^2)/2 >= ((a+b)/2)^2 >= ab >= 1/max|<tau_j, omega_k>|^2.
struct RtChainReport {
    double am;
    double sq_mean;
    double product;
    double bound;
    bool all_hold;
    std::array<Eigen::Index, 2> supports;
};

struct BoundsRow {
    double p;
    double discup_bound; // 1/(c1 c2)^p
    double uup_bound;    // 1/(c1 c2)
    double rt_bound;     // 1/max|<tau_j, omega_k>|^2
};

/// supp(theta_f x) * supp(theta_g x) >= 1/(c_f_omega^p * c_g_tau^p), p in (0,1).
UncertaintyReport verify_discup(const FramePair& f_pair, const FramePair& g_pair,
                                const CVec& x, const PExponent& p,
                                const SupportPolicy& policy = SupportPolicy{});

/// First factor inequality: supp(theta_f x) * ||theta_g x||_p >= ||theta_f x||_p / c_f_omega^p.
UncertaintyReport verify_fi(const FramePair& f_pair, const FramePair& g_pair,
                            const CVec& x, const PExponent& p,
                            const SupportPolicy& policy = SupportPolicy{});

/// Second factor inequality, roles of f and g exchanged with c_g_tau.
UncertaintyReport verify_si(const FramePair& f_pair, const FramePair& g_pair,
                            const CVec& x, const PExponent& p,
                            const SupportPolicy& policy = SupportPolicy{});

/// Hilbert-space chain for two Parseval pairs.
RtChainReport verify_rt_chain(const FramePair& tau_pair, const FramePair& omega_pair,
                              const CVec& h, const SupportPolicy& policy = SupportPolicy{});

/// Hoelder-split support bound for p in [1, inf]; requires both pairs to
/// satisfy the p-norm equality (certified by sampling through classify).
/// The report carries the tighter of the theorem's two inequalities;
/// holds is the conjunction.  The p = inf case crosses the coherences
/// exactly as the statement does.
UncertaintyReport verify_mt(const FramePair& f_pair, const FramePair& g_pair,
                            const CVec& x, const PExponent& p,
                            const SupportPolicy& policy = SupportPolicy{},
                            RefNorm reference = RefNorm::euclidean,
                            int sample_count = 64, unsigned long long seed = 0);

/// supp(theta_f x) * supp(theta_g x) >= 1/(c_f_omega * c_g_tau), p in {1, inf}.
UncertaintyReport verify_uup(const FramePair& f_pair, const FramePair& g_pair,
                             const CVec& x, const PExponent& p,
                             const SupportPolicy& policy = SupportPolicy{});

/// Tabulates the three bounds across a p-grid in (0,1).
std::vector<BoundsRow> compare_bounds(const FramePair& f_pair, const FramePair& g_pair,
                                      const std::vector<double>& p_grid);

/// max |<tau_j, omega_k>| over the two synthesis families.
double rt_coherence(const FramePair& tau_pair, const FramePair& omega_pair);

/// Frame operator of the synthesis columns equals I within 1e-9.
bool is_parseval(const FramePair& pair);

} // namespace uncert
