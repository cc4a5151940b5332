#include <doctest.h>

#include "uncert/constructions.hpp"
#include "uncert/frames.hpp"

#include <cmath>
#include <random>

using namespace uncert;

TEST_CASE("identity pair reconstructs exactly") {
    const FramePair id = identity_pair(4);
    const auto r = verify_reconstruction(id);
    CHECK(r.max_residual == 0.0);
    CHECK(r.holds);
    CHECK(id.ambient_dim() == 4);
    CHECK(id.count() == 4);
}

TEST_CASE("normalized DFT pair is unitary") {
    const FramePair dft = dft_pair(4);
    const auto r = verify_reconstruction(dft);
    CHECK(r.max_residual < 1e-14);
    CHECK(r.holds);
}

TEST_CASE("scaled identity breaks reconstruction") {
    const FramePair bad(CMat::Identity(4, 4), 2.0 * CMat::Identity(4, 4), 1.0);
    const auto r = verify_reconstruction(bad, 1e-10);
    CHECK(r.max_residual == doctest::Approx(1.0));
    CHECK_FALSE(r.holds);
}

TEST_CASE("constructor rejects inconsistent shapes") {
    CHECK_THROWS_AS(FramePair(CMat::Identity(4, 4), CMat::Identity(3, 3)), InputError);
    // m < d: analysis 2x4 cannot reconstruct K^4.
    CHECK_THROWS_AS(FramePair(CMat::Ones(2, 4), CMat::Ones(4, 2)), InputError);
    CMat nan_mat = CMat::Identity(2, 2);
    nan_mat(0, 0) = std::complex<double>(std::nan(""), 0.0);
    CHECK_THROWS_AS(FramePair(nan_mat, CMat::Identity(2, 2)), InputError);
}

TEST_CASE("classify: identity pair is Parseval and p-norm exact") {
    const FramePair id = identity_pair(4);

    const auto euclid = classify(id, {PExponent::of(2.0)}, 32, 7, RefNorm::euclidean);
    CHECK(euclid.reconstructs);
    CHECK(euclid.parseval);
    CHECK(euclid.p_norm_exact.at(2.0));

    const auto lp = classify(id, {PExponent::of(0.5)}, 32, 7, RefNorm::lp);
    CHECK(lp.p_norm_exact.at(0.5));
}

TEST_CASE("classify: DFT pair fails the l^0.5 identity but keeps l^2") {
    const FramePair dft = dft_pair(4);

    const auto lp = classify(dft, {PExponent::of(0.5)}, 32, 7, RefNorm::lp);
    CHECK(lp.parseval);
    CHECK_FALSE(lp.p_norm_exact.at(0.5));

    const auto euclid = classify(dft, {PExponent::of(2.0)}, 32, 7, RefNorm::euclidean);
    CHECK(euclid.p_norm_exact.at(2.0));
}

TEST_CASE("classify input validation") {
    const FramePair id = identity_pair(3);
    CHECK_THROWS_AS(classify(id, {}, 32, 7), InputError);
    const FramePair bad(CMat::Identity(3, 3), 2.0 * CMat::Identity(3, 3), 1.0);
    CHECK_THROWS_AS(classify(bad, {PExponent::of(2.0)}, 32, 7), InputError);
}

TEST_CASE("cross-coherence of identity vs DFT is n^{-1/2}") {
    for (Eigen::Index n : {4, 9}) {
        const auto c = cross_coherence(identity_pair(n), dft_pair(n));
        const double want = 1.0 / std::sqrt(static_cast<double>(n));
        CHECK(c.c_f_omega == doctest::Approx(want).epsilon(1e-12));
        CHECK(c.c_g_tau == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("cross-coherence of a basis with itself is 1") {
    const FramePair id = identity_pair(5);
    const auto c = cross_coherence(id, id);
    CHECK(c.c_f_omega == doctest::Approx(1.0));
    CHECK(c.c_g_tau == doctest::Approx(1.0));
}

TEST_CASE("cross-coherence swaps roles under argument exchange") {
    std::mt19937_64 seeds(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index d = 2 + trial % 5;
        const FramePair a = random_biorthogonal_pair(d, d, seeds());
        const FramePair b = random_biorthogonal_pair(d, d, seeds());
        const auto ab = cross_coherence(a, b);
        const auto ba = cross_coherence(b, a);
        CHECK(ab.c_f_omega == doctest::Approx(ba.c_g_tau).epsilon(1e-13));
        CHECK(ab.c_g_tau == doctest::Approx(ba.c_f_omega).epsilon(1e-13));
    }
    CHECK_THROWS_AS(cross_coherence(identity_pair(3), identity_pair(4)), InputError);
}

TEST_CASE("analyze on the worked examples") {
    const FramePair id = identity_pair(4);
    CVec x(4);
    x << 1.0, 0.0, 1.0, 0.0;
    const CoeffSeq idc = analyze(id, x);
    CHECK((idc - x).norm() == 0.0);

    // DFT of the spacing-2 comb lands on the dual comb {0, 2} with value 1.
    const CoeffSeq dftc = analyze(dft_pair(4), x);
    CHECK(std::abs(dftc[0] - 1.0) < 1e-14);
    CHECK(std::abs(dftc[1]) < 1e-14);
    CHECK(std::abs(dftc[2] - 1.0) < 1e-14);
    CHECK(std::abs(dftc[3]) < 1e-14);

    CHECK(analyze(id, CVec::Zero(4)).isZero(0.0));
    CHECK_THROWS_AS(analyze(id, CVec::Zero(3)), InputError);
}

TEST_CASE("analysis-then-synthesis returns the input") {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> n01(0.0, 1.0);
    std::mt19937_64 seeds(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index d = 1 + trial % 6;
        const Eigen::Index m = d + (trial % 3);
        const FramePair pair = random_biorthogonal_pair(d, m, seeds());
        CVec x(d);
        for (Eigen::Index i = 0; i < d; ++i) x[i] = std::complex<double>(n01(rng), n01(rng));
        const CVec back = pair.synthesis() * analyze(pair, x);
        CHECK((back - x).cwiseAbs().maxCoeff() <=
              static_cast<double>(d) * pair.recon_tol() * std::max(1.0, x.norm()));
    }
}

TEST_CASE("Parseval pairs satisfy the energy identity on samples") {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> n01(0.0, 1.0);
    for (Eigen::Index n : {3, 4, 8}) {
        const FramePair dft = dft_pair(n);
        for (int trial = 0; trial < 50; ++trial) {
            CVec h(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                h[i] = std::complex<double>(n01(rng), n01(rng));
            }
            // sum |<h, tau_j>|^2 over synthesis columns.
            double total = 0.0;
            for (Eigen::Index j = 0; j < dft.count(); ++j) {
                total += std::norm(dft.synthesis().col(j).dot(h));
            }
            const double want = h.squaredNorm();
            CHECK(std::abs(total - want) <= 1e-10 * std::max(1.0, want));
        }
    }
}
