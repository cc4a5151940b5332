#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "uncert/quasinorm.hpp"

namespace uncert {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Reference norm on the ambient space used when classifying a pair.
/// euclidean is the l2 norm; lp is the p-(quasi)norm of the coordinates,
/// evaluated with the same exponent the classification tests.
enum class RefNorm { euclidean, lp };

struct ReconstructionReport {
    double max_residual; // max-entry magnitude of synthesis*analysis - I
    bool holds;
};

/// The two cross-coherences between a pair (f, tau) and a pair (g, omega):
/// c_f_omega = max |f_n(omega_m)|,  c_g_tau = max |g_m(tau_n)|.
struct CoherencePair {
    double c_f_omega;
    double c_g_tau;
};

struct FrameClassification {
    bool reconstructs;
    bool parseval;
    std::map<double, bool> p_norm_exact;
};

/// Analysis functionals (rows of an m x d matrix) together with synthesis
/// vectors (columns of a d x m matrix), contracted to reconstruct:
/// synthesis * analysis = I_d. Immutable after construction.
///
/// The constructor validates shapes only and caches the reconstruction
/// residual; whether the pair actually reconstructs is a separate check so
/// that broken pairs can be diagnosed through verify_reconstruction.
class FramePair {
public:
    FramePair(CMat analysis, CMat synthesis,
              std::optional<double> cond_estimate = std::nullopt);

    const CMat& analysis() const { return analysis_; }
    const CMat& synthesis() const { return synthesis_; }
    Eigen::Index ambient_dim() const { return analysis_.cols(); }
    Eigen::Index count() const { return analysis_.rows(); }

    /// Cached max-entry magnitude of synthesis*analysis - I.
    double recon_residual() const { return recon_residual_; }

    /// Frobenius-based estimate of cond(analysis); >= 1.
    double cond_estimate() const { return cond_estimate_; }

    /// Default reconstruction tolerance: 1e-9 scaled by the condition
    /// estimate, so random pairs absorb their inversion error.
    double recon_tol() const { return 1e-9 * cond_estimate_; }

private:
    CMat analysis_;  // m x d
    CMat synthesis_; // d x m
    double recon_residual_;
    double cond_estimate_;
};

/// Checks synthesis*analysis = I_d against tol (defaults to pair.recon_tol()).
ReconstructionReport verify_reconstruction(const FramePair& pair,
                                           std::optional<double> tol = std::nullopt);

/// Tests the pair against the frame definitions: reconstruction, Parseval
/// (frame operator of the synthesis columns equals I), and exactness of
/// the p-(quasi)norm identity on sampled vectors for each requested p.
FrameClassification classify(const FramePair& pair,
                             const std::vector<PExponent>& p_list,
                             int sample_count, unsigned long long seed,
                             RefNorm reference = RefNorm::euclidean);

CoherencePair cross_coherence(const FramePair& fg, const FramePair& gw);

/// theta_f x: the coefficient sequence (analysis * x).
CoeffSeq analyze(const FramePair& pair, const CVec& x);

/// Reference norm of x under the chosen convention.
double reference_norm(const CVec& x, const PExponent& p, RefNorm reference);

namespace detail {
/// Max-entry magnitude of a complex matrix.
double max_abs(const CMat& m);
/// Complex standard Gaussian vector from an mt19937_64 stream.
CVec gaussian_vector(Eigen::Index d, std::mt19937_64& rng);
} // namespace detail

} // namespace uncert
