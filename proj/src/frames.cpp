#include "uncert/frames.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

namespace uncert {

namespace detail {

double max_abs(const CMat& m) {
    double peak = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            peak = std::max(peak, std::abs(m(i, j)));
        }
    }
    return peak;
}

CVec gaussian_vector(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    CVec v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        v[i] = std::complex<double>(n01(rng), n01(rng)) / std::sqrt(2.0);
    }
    return v;
}

void validate_matrix(const CMat& m, const char* what) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw InputError(std::string(what) + " matrix must be nonempty");
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                throw InputError(std::string(what) + " matrix has a non-finite entry");
            }
        }
    }
}

// cond estimate via Frobenius norms of the matrix and its pseudo-inverse.
double frobenius_cond_estimate(const CMat& analysis) {
    Eigen::CompleteOrthogonalDecomposition<CMat> cod(analysis);
    const CMat pinv = cod.pseudoInverse();
    const double c = analysis.norm() * pinv.norm();
    return std::isfinite(c) ? std::max(1.0, c) : std::numeric_limits<double>::max();
}

} // namespace detail

FramePair::FramePair(CMat analysis, CMat synthesis, std::optional<double> cond_estimate)
    : analysis_(std::move(analysis)), synthesis_(std::move(synthesis)) {
    detail::validate_matrix(analysis_, "analysis");
    detail::validate_matrix(synthesis_, "synthesis");
    if (synthesis_.rows() != analysis_.cols() || synthesis_.cols() != analysis_.rows()) {
        throw InputError("synthesis must be d x m for an m x d analysis");
    }
    if (analysis_.rows() < analysis_.cols()) {
        throw InputError("reconstruction requires count m >= ambient dimension d");
    }
    const Eigen::Index d = analysis_.cols();
    CMat residual = synthesis_ * analysis_;
    residual -= CMat::Identity(d, d);
    recon_residual_ = detail::max_abs(residual);
    if (cond_estimate && *cond_estimate >= 1.0) {
        cond_estimate_ = *cond_estimate;
    } else {
        cond_estimate_ = detail::frobenius_cond_estimate(analysis_);
    }
}

ReconstructionReport verify_reconstruction(const FramePair& pair, std::optional<double> tol) {
    const double t = tol.value_or(pair.recon_tol());
    return ReconstructionReport{pair.recon_residual(), pair.recon_residual() <= t};
}

double reference_norm(const CVec& x, const PExponent& p, RefNorm reference) {
    if (reference == RefNorm::euclidean) return x.norm();
    return p_quasinorm(x, p);
}

FrameClassification classify(const FramePair& pair, const std::vector<PExponent>& p_list,
                             int sample_count, unsigned long long seed, RefNorm reference) {
    if (p_list.empty()) {
        throw InputError("classify requires a nonempty p_list");
    }
    if (sample_count < 1) {
        throw InputError("classify requires sample_count >= 1");
    }
    FrameClassification out;
    out.reconstructs = verify_reconstruction(pair).holds;
    if (!out.reconstructs) {
        throw InputError("classify requires a reconstructing pair");
    }

    const Eigen::Index d = pair.ambient_dim();
    CMat frame_op = pair.synthesis() * pair.synthesis().adjoint();
    frame_op -= CMat::Identity(d, d);
    out.parseval = detail::max_abs(frame_op) <= 1e-9;

    std::mt19937_64 rng(seed);
    std::vector<CVec> samples;
    samples.reserve(static_cast<size_t>(sample_count));
    for (int s = 0; s < sample_count; ++s) {
        samples.push_back(detail::gaussian_vector(d, rng));
    }

    for (const PExponent& p : p_list) {
        bool exact = true;
        for (const CVec& x : samples) {
            const double lhs = p_quasinorm(analyze(pair, x), p);
            const double ref = reference_norm(x, p, reference);
            if (std::abs(lhs - ref) > 1e-9 * std::max(1e-300, ref)) {
                exact = false;
                break;
            }
        }
        out.p_norm_exact[p.value()] = exact;
    }
    return out;
}

CoherencePair cross_coherence(const FramePair& fg, const FramePair& gw) {
    if (fg.ambient_dim() != gw.ambient_dim()) {
        throw InputError("cross_coherence requires equal ambient dimensions");
    }
    const double c_f_omega = detail::max_abs(fg.analysis() * gw.synthesis());
    const double c_g_tau = detail::max_abs(gw.analysis() * fg.synthesis());
    return CoherencePair{c_f_omega, c_g_tau};
}

CoeffSeq analyze(const FramePair& pair, const CVec& x) {
    if (x.size() != pair.ambient_dim()) {
        throw InputError("analyze: vector length must equal the ambient dimension");
    }
    validate_coeffs(x);
    return pair.analysis() * x;
}

} // namespace uncert
