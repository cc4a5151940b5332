#include "uncert/uncertainty.hpp"

#include <cmath>
#include <string>

namespace uncert {

namespace {

// Comparison slack for "lhs >= bound": lhs is exact, bound carries pow rounding.
bool holds_with_slack(double lhs, double bound) {
    return lhs >= bound - 1e-12 * std::max(1.0, std::abs(bound));
}

void require_nonzero(const CVec& x) {
    validate_coeffs(x);
    if (x.isZero(0.0)) {
        throw ExcludedInputError("the theorem excludes x = 0");
    }
}

CoherencePair require_nondegenerate_coherence(const FramePair& f_pair,
                                              const FramePair& g_pair) {
    const CoherencePair c = cross_coherence(f_pair, g_pair);
    if (c.c_f_omega == 0.0 || c.c_g_tau == 0.0) {
        throw DegenerateBoundError(
            "cross-coherence is zero: one analysis annihilates the other synthesis family");
    }
    return c;
}

void require_reconstructing(const FramePair& pair, const char* which) {
    if (!verify_reconstruction(pair).holds) {
        throw InputError(std::string(which) + " pair does not reconstruct at its tolerance");
    }
}

} // namespace

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::RT: return "rt";
        case TheoremId::MT: return "mt";
        case TheoremId::UUP: return "uup";
        case TheoremId::DISCUP: return "discup";
        case TheoremId::FI: return "fi";
        case TheoremId::SI: return "si";
    }
    return "?";
}

bool is_parseval(const FramePair& pair) {
    const Eigen::Index d = pair.ambient_dim();
    CMat frame_op = pair.synthesis() * pair.synthesis().adjoint();
    frame_op -= CMat::Identity(d, d);
    return detail::max_abs(frame_op) <= 1e-9;
}

double rt_coherence(const FramePair& tau_pair, const FramePair& omega_pair) {
    if (tau_pair.ambient_dim() != omega_pair.ambient_dim()) {
        throw InputError("rt_coherence requires equal ambient dimensions");
    }
    return detail::max_abs(omega_pair.synthesis().adjoint() * tau_pair.synthesis());
}

UncertaintyReport verify_discup(const FramePair& f_pair, const FramePair& g_pair,
                                const CVec& x, const PExponent& p,
                                const SupportPolicy& policy) {
    if (!p.is_sub_one()) {
        throw RegimeError("verify_discup requires p in (0,1)");
    }
    require_nonzero(x);
    const CoherencePair c = require_nondegenerate_coherence(f_pair, g_pair);
    require_reconstructing(f_pair, "f");
    require_reconstructing(g_pair, "g");

    const Eigen::Index supp_f = support_count(analyze(f_pair, x), policy);
    const Eigen::Index supp_g = support_count(analyze(g_pair, x), policy);
    const double lhs = static_cast<double>(supp_f) * static_cast<double>(supp_g);
    const double bound = 1.0 / (pow_p(c.c_f_omega, p.value()) * pow_p(c.c_g_tau, p.value()));
    return UncertaintyReport{TheoremId::DISCUP, lhs,   bound,
                             holds_with_slack(lhs, bound), lhs / bound,
                             {supp_f, supp_g},             p.value()};
}

namespace {

// Shared body of the two factor inequalities; FI keeps (f,g) order, SI swaps.
UncertaintyReport verify_factor(TheoremId id, const FramePair& f_pair,
                                const FramePair& g_pair, const CVec& x,
                                const PExponent& p, const SupportPolicy& policy) {
    if (!p.is_sub_one()) {
        throw RegimeError("factor inequalities require p in (0,1)");
    }
    require_nonzero(x);
    const CoherencePair c = require_nondegenerate_coherence(f_pair, g_pair);
    require_reconstructing(f_pair, "f");
    require_reconstructing(g_pair, "g");

    const CoeffSeq theta_f = analyze(f_pair, x);
    const CoeffSeq theta_g = analyze(g_pair, x);
    const Eigen::Index supp_f = support_count(theta_f, policy);
    const Eigen::Index supp_g = support_count(theta_g, policy);

    double lhs = 0.0;
    double bound = 0.0;
    if (id == TheoremId::FI) {
        lhs = static_cast<double>(supp_f) * p_quasinorm(theta_g, p);
        bound = p_quasinorm(theta_f, p) / pow_p(c.c_f_omega, p.value());
    } else {
        lhs = static_cast<double>(supp_g) * p_quasinorm(theta_f, p);
        bound = p_quasinorm(theta_g, p) / pow_p(c.c_g_tau, p.value());
    }
    return UncertaintyReport{id,     lhs,
                             bound,  holds_with_slack(lhs, bound),
                             bound > 0.0 ? lhs / bound : 0.0,
                             {supp_f, supp_g},
                             p.value()};
}

} // namespace

UncertaintyReport verify_fi(const FramePair& f_pair, const FramePair& g_pair,
                            const CVec& x, const PExponent& p, const SupportPolicy& policy) {
    return verify_factor(TheoremId::FI, f_pair, g_pair, x, p, policy);
}

UncertaintyReport verify_si(const FramePair& f_pair, const FramePair& g_pair,
                            const CVec& x, const PExponent& p, const SupportPolicy& policy) {
    return verify_factor(TheoremId::SI, f_pair, g_pair, x, p, policy);
}

RtChainReport verify_rt_chain(const FramePair& tau_pair, const FramePair& omega_pair,
                              const CVec& h, const SupportPolicy& policy) {
    require_nonzero(h);
    if (!is_parseval(tau_pair) || !is_parseval(omega_pair)) {
        throw ClassificationError("verify_rt_chain requires Parseval pairs");
    }
    const double coh = rt_coherence(tau_pair, omega_pair);
    if (coh == 0.0) {
        throw DegenerateBoundError("the synthesis families are fully incoherent");
    }

    const Eigen::Index a_count = support_count(analyze(tau_pair, h), policy);
    const Eigen::Index b_count = support_count(analyze(omega_pair, h), policy);
    const double a = static_cast<double>(a_count);
    const double b = static_cast<double>(b_count);

    RtChainReport r;
    r.am = (a * a + b * b) / 2.0;
    r.sq_mean = (a + b) / 2.0 * ((a + b) / 2.0);
    r.product = a * b;
    r.bound = 1.0 / (coh * coh);
    r.supports = {a_count, b_count};
    r.all_hold = holds_with_slack(r.am, r.sq_mean) && holds_with_slack(r.sq_mean, r.product) &&
                 holds_with_slack(r.product, r.bound);
    return r;
}

UncertaintyReport verify_mt(const FramePair& f_pair, const FramePair& g_pair,
                            const CVec& x, const PExponent& p, const SupportPolicy& policy,
                            RefNorm reference, int sample_count, unsigned long long seed) {
    if (p.is_sub_one()) {
        throw RegimeError("verify_mt requires p >= 1 or p = inf");
    }
    require_nonzero(x);
    const CoherencePair c = require_nondegenerate_coherence(f_pair, g_pair);
    require_reconstructing(f_pair, "f");
    require_reconstructing(g_pair, "g");

    // The hypothesis is the full norm equality, certified by sampling.
    const std::vector<PExponent> ps{p};
    if (!classify(f_pair, ps, sample_count, seed, reference).p_norm_exact.at(p.value())) {
        throw ClassificationError("f pair is not a p-Schauder frame for this p");
    }
    if (!classify(g_pair, ps, sample_count, seed + 1, reference).p_norm_exact.at(p.value())) {
        throw ClassificationError("g pair is not a p-Schauder frame for this p");
    }

    const double supp_f =
        static_cast<double>(support_count(analyze(f_pair, x), policy));
    const double supp_g =
        static_cast<double>(support_count(analyze(g_pair, x), policy));

    double lhs1 = 0.0, lhs2 = 0.0;
    if (p.regime() == PExponent::Regime::super_one) {
        const double q = p.value() / (p.value() - 1.0);
        lhs1 = std::pow(supp_f, 1.0 / p.value()) * std::pow(supp_g, 1.0 / q);
        lhs2 = std::pow(supp_g, 1.0 / p.value()) * std::pow(supp_f, 1.0 / q);
    } else if (p.regime() == PExponent::Regime::one) {
        lhs1 = supp_f;
        lhs2 = supp_g;
    } else {
        // p = inf crosses the coherences, exactly as stated.
        lhs1 = supp_g;
        lhs2 = supp_f;
    }
    const double bound1 = 1.0 / c.c_f_omega;
    const double bound2 = 1.0 / c.c_g_tau;

    const bool holds = holds_with_slack(lhs1, bound1) && holds_with_slack(lhs2, bound2);
    const bool first_tighter = lhs1 / bound1 <= lhs2 / bound2;
    const double lhs = first_tighter ? lhs1 : lhs2;
    const double bound = first_tighter ? bound1 : bound2;
    return UncertaintyReport{TheoremId::MT, lhs,        bound, holds, lhs / bound,
                             {static_cast<Eigen::Index>(supp_f),
                              static_cast<Eigen::Index>(supp_g)},
                             p.value()};
}

UncertaintyReport verify_uup(const FramePair& f_pair, const FramePair& g_pair,
                             const CVec& x, const PExponent& p, const SupportPolicy& policy) {
    if (p.regime() != PExponent::Regime::one && !p.is_infinite()) {
        throw RegimeError("verify_uup requires p = 1 or p = inf");
    }
    require_nonzero(x);
    const CoherencePair c = require_nondegenerate_coherence(f_pair, g_pair);
    require_reconstructing(f_pair, "f");
    require_reconstructing(g_pair, "g");

    const Eigen::Index supp_f = support_count(analyze(f_pair, x), policy);
    const Eigen::Index supp_g = support_count(analyze(g_pair, x), policy);
    const double lhs = static_cast<double>(supp_f) * static_cast<double>(supp_g);
    const double bound = 1.0 / (c.c_f_omega * c.c_g_tau);
    return UncertaintyReport{TheoremId::UUP, lhs,   bound,
                             holds_with_slack(lhs, bound), lhs / bound,
                             {supp_f, supp_g},             p.value()};
}

std::vector<BoundsRow> compare_bounds(const FramePair& f_pair, const FramePair& g_pair,
                                      const std::vector<double>& p_grid) {
    if (p_grid.empty()) {
        throw InputError("compare_bounds requires a nonempty p grid");
    }
    const CoherencePair c = require_nondegenerate_coherence(f_pair, g_pair);
    const double coh = rt_coherence(f_pair, g_pair);
    if (coh == 0.0) {
        throw DegenerateBoundError("the synthesis families are fully incoherent");
    }
    const double product = c.c_f_omega * c.c_g_tau;

    std::vector<BoundsRow> rows;
    rows.reserve(p_grid.size());
    for (double p : p_grid) {
        const PExponent pe = PExponent::of(p);
        if (!pe.is_sub_one()) {
            throw RegimeError("compare_bounds grid must lie in (0,1)");
        }
        rows.push_back(BoundsRow{p, 1.0 / pow_p(product, p), 1.0 / product,
                                 1.0 / (coh * coh)});
    }
    return rows;
}

} // namespace uncert
