#include "uncert/constructions.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace uncert {

FramePair identity_pair(Eigen::Index d) {
    if (d < 1) throw InputError("identity_pair requires d >= 1");
    return FramePair(CMat::Identity(d, d), CMat::Identity(d, d), 1.0);
}

FramePair dft_pair(Eigen::Index n) {
    if (n < 1) throw InputError("dft_pair requires n >= 1");
    CMat analysis(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index j = 0; j < n; ++j) {
            // Reduce jk mod n before forming the angle to keep phases exact-ish.
            const double t = static_cast<double>((k * j) % n) / static_cast<double>(n);
            const double angle = -2.0 * std::numbers::pi * t;
            analysis(k, j) = scale * std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }
    return FramePair(analysis, analysis.adjoint(), 1.0);
}

FramePair random_biorthogonal_pair(Eigen::Index d, Eigen::Index m,
                                   unsigned long long seed, double cond_cap) {
    if (d < 1) throw InputError("random_biorthogonal_pair requires d >= 1");
    if (m < d) throw InputError("random_biorthogonal_pair requires m >= d");
    if (!(cond_cap > 1.0)) throw InputError("cond_cap must exceed 1");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n01(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    for (int attempt = 0; attempt < 100; ++attempt) {
        CMat analysis(m, d);
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index i = 0; i < m; ++i) {
                analysis(i, j) = std::complex<double>(n01(rng), n01(rng)) * inv_sqrt2;
            }
        }
        Eigen::CompleteOrthogonalDecomposition<CMat> cod(analysis);
        if (cod.rank() < d) continue;
        const CMat synthesis = cod.pseudoInverse();
        const double cond = std::max(1.0, analysis.norm() * synthesis.norm());
        if (cond > cond_cap) continue;
        return FramePair(analysis, synthesis, cond);
    }
    throw GenerationError("no draw met the condition cap within 100 retries");
}

CVec dirac_comb(Eigen::Index n, Eigen::Index spacing, Eigen::Index offset) {
    if (n < 1 || spacing < 1 || n % spacing != 0) {
        throw InputError("dirac_comb requires spacing >= 1 dividing n");
    }
    if (offset < 0 || offset >= spacing) {
        throw InputError("dirac_comb requires 0 <= offset < spacing");
    }
    CVec x = CVec::Zero(n);
    for (Eigen::Index i = offset; i < n; i += spacing) {
        x[i] = 1.0;
    }
    return x;
}

DiscNormAxiomReport check_disc_norm_axioms(const PExponent& p, Eigen::Index d,
                                           long sample_count, unsigned long long seed) {
    if (!p.is_sub_one()) {
        throw RegimeError("disc norm axioms are checked for p in (0,1)");
    }
    if (d < 1 || sample_count < 1) {
        throw InputError("check_disc_norm_axioms requires d >= 1 and sample_count >= 1");
    }

    DiscNormAxiomReport report;
    report.axioms[0].axiom = "definiteness";
    report.axioms[1].axiom = "triangle";
    report.axioms[2].axiom = "scaling_contract";  // |lambda| >= 1
    report.axioms[3].axiom = "scaling_expand";    // |lambda| <= 1

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n01(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    for (long s = 0; s < sample_count; ++s) {
        const CVec x = detail::gaussian_vector(d, rng);
        const CVec y = detail::gaussian_vector(d, rng);
        // Magnitudes concentrated around 1 so both scaling regimes get hit.
        const double r = std::abs(n01(rng)) * 1.5;
        const double a = angle(rng);
        const std::complex<double> lambda = r * std::complex<double>(std::cos(a), std::sin(a));

        const double nx = p_quasinorm(x, p);
        const double ny = p_quasinorm(y, p);
        const double nxy = p_quasinorm(x + y, p);
        const double nlx = p_quasinorm(lambda * x, p);
        const double slack = 1e-12 * std::max(1.0, nx + ny);

        report.axioms[0].checked++;
        if (!(x.isZero(0.0) ? nx == 0.0 : nx > 0.0)) report.axioms[0].failures++;

        report.axioms[1].checked++;
        if (!(nxy <= nx + ny + slack)) report.axioms[1].failures++;

        const double mag = std::abs(lambda);
        if (mag >= 1.0) {
            report.axioms[2].checked++;
            if (!(nlx <= mag * nx + slack)) report.axioms[2].failures++;
        }
        if (mag <= 1.0) {
            report.axioms[3].checked++;
            if (!(nlx >= mag * nx - slack)) report.axioms[3].failures++;
        }
    }
    return report;
}

} // namespace uncert
