#include <doctest.h>

#include "uncert/constructions.hpp"
#include "uncert/uncertainty.hpp"

#include <cmath>
#include <random>

using namespace uncert;

namespace {

CVec gaussian(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    CVec v(d);
    for (Eigen::Index i = 0; i < d; ++i) v[i] = std::complex<double>(n01(rng), n01(rng));
    return v;
}

const double kSqrt2 = std::sqrt(2.0);

} // namespace

TEST_CASE("discup on identity vs 4-point DFT") {
    const FramePair id = identity_pair(4);
    const FramePair dft = dft_pair(4);
    const PExponent p = PExponent::of(0.5);

    const auto comb = verify_discup(id, dft, dirac_comb(4, 2), p);
    CHECK(comb.lhs == doctest::Approx(4.0));
    CHECK(comb.bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(comb.holds);
    CHECK(comb.supports[0] == 2);
    CHECK(comb.supports[1] == 2);

    CVec spike = CVec::Zero(4);
    spike[0] = 1.0;
    const auto sp = verify_discup(id, dft, spike, p);
    CHECK(sp.lhs == doctest::Approx(4.0)); // 1 * 4
    CHECK(sp.bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sp.holds);

    const auto flat = verify_discup(id, dft, CVec::Ones(4), p);
    CHECK(flat.lhs == doctest::Approx(4.0)); // 4 * 1
    CHECK(flat.holds);
}

TEST_CASE("discup error paths") {
    const FramePair id = identity_pair(4);
    const FramePair dft = dft_pair(4);
    CHECK_THROWS_AS(verify_discup(id, dft, CVec::Zero(4), PExponent::of(0.5)),
                    ExcludedInputError);
    CHECK_THROWS_AS(verify_discup(id, dft, CVec::Ones(4), PExponent::of(1.0)), RegimeError);
    CHECK_THROWS_AS(verify_discup(id, dft, CVec::Ones(4), PExponent::of(2.0)), RegimeError);

    // A zero synthesis family annihilates every functional: degenerate bound.
    const FramePair broken(CMat::Identity(4, 4), CMat::Zero(4, 4), 1.0);
    CHECK_THROWS_AS(verify_discup(id, broken, CVec::Ones(4), PExponent::of(0.5)),
                    DegenerateBoundError);

    // Non-reconstructing input pairs are rejected.
    const FramePair bad(CMat::Identity(4, 4), 2.0 * CMat::Identity(4, 4), 1.0);
    CHECK_THROWS_AS(verify_discup(bad, dft, CVec::Ones(4), PExponent::of(0.5)), InputError);
}

TEST_CASE("factor inequalities on the worked examples") {
    const FramePair id = identity_pair(4);
    const FramePair dft = dft_pair(4);
    const PExponent p = PExponent::of(0.5);

    // Quasinorms of DFT outputs carry entry noise amplified to noise^p,
    // so frozen values are pinned at 1e-7 relative instead of 1e-12.
    const auto fi_comb = verify_fi(id, dft, dirac_comb(4, 2), p);
    CHECK(fi_comb.lhs == doctest::Approx(4.0).epsilon(1e-7));
    CHECK(fi_comb.bound == doctest::Approx(2.0 * kSqrt2).epsilon(1e-12));
    CHECK(fi_comb.holds);

    CVec spike = CVec::Zero(4);
    spike[0] = 1.0;
    const auto fi_spike = verify_fi(id, dft, spike, p);
    CHECK(fi_spike.lhs == doctest::Approx(2.0 * kSqrt2).epsilon(1e-12));
    CHECK(fi_spike.bound == doctest::Approx(kSqrt2).epsilon(1e-12));
    CHECK(fi_spike.holds);

    // Same basis twice: FI is an equality at a spike.
    const auto fi_self = verify_fi(id, id, spike, p);
    CHECK(fi_self.lhs == doctest::Approx(1.0));
    CHECK(fi_self.bound == doctest::Approx(1.0));
    CHECK(fi_self.holds);

    const auto si_comb = verify_si(id, dft, dirac_comb(4, 2), p);
    CHECK(si_comb.lhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(si_comb.bound == doctest::Approx(2.0 * kSqrt2).epsilon(1e-7));
    CHECK(si_comb.holds);
}

TEST_CASE("rt chain on the worked examples") {
    const FramePair id = identity_pair(4);
    const FramePair dft = dft_pair(4);

    const auto comb = verify_rt_chain(id, dft, dirac_comb(4, 2));
    CHECK(comb.am == doctest::Approx(4.0));
    CHECK(comb.sq_mean == doctest::Approx(4.0));
    CHECK(comb.product == doctest::Approx(4.0));
    CHECK(comb.bound == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(comb.all_hold);

    CVec spike = CVec::Zero(4);
    spike[0] = 1.0;
    const auto sp = verify_rt_chain(id, dft, spike);
    CHECK(sp.am == doctest::Approx(8.5));
    CHECK(sp.sq_mean == doctest::Approx(6.25));
    CHECK(sp.product == doctest::Approx(4.0));
    CHECK(sp.bound == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sp.all_hold);

    const auto self = verify_rt_chain(id, id, spike);
    CHECK(self.am == doctest::Approx(1.0));
    CHECK(self.sq_mean == doctest::Approx(1.0));
    CHECK(self.product == doctest::Approx(1.0));
    CHECK(self.bound == doctest::Approx(1.0));
    CHECK(self.all_hold);
}

TEST_CASE("rt chain preconditions") {
    const FramePair id = identity_pair(4);
    CHECK_THROWS_AS(verify_rt_chain(id, id, CVec::Zero(4)), ExcludedInputError);
    // A biorthogonal-but-not-Parseval pair is rejected.
    CMat a(2, 2);
    a << 2.0, 0.0, 0.0, 1.0;
    CMat s(2, 2);
    s << 0.5, 0.0, 0.0, 1.0;
    const FramePair skew(a, s, 10.0);
    CHECK(verify_reconstruction(skew).holds);
    CHECK_FALSE(is_parseval(skew));
    CHECK_THROWS_AS(verify_rt_chain(skew, id, CVec::Ones(2)), ClassificationError);
}

TEST_CASE("rt chain internal order is pure arithmetic on supports") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> supp(1, 40);
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = supp(rng);
        const double b = supp(rng);
        const double am = (a * a + b * b) / 2.0;
        const double sq = (a + b) / 2.0 * ((a + b) / 2.0);
        CHECK(am >= sq - 1e-12 * std::max(1.0, sq));
        CHECK(sq >= a * b - 1e-12 * std::max(1.0, a * b));
    }
}

TEST_CASE("mt across the three regimes") {
    const FramePair id4 = identity_pair(4);
    const FramePair dft4 = dft_pair(4);

    // p = 2: Parseval pairs are 2-Schauder with the euclidean reference.
    const auto two = verify_mt(id4, dft4, dirac_comb(4, 2), PExponent::of(2.0));
    CHECK(two.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.holds);

    // p = 1: the canonical basis against itself with the l^1 reference.
    CVec spike = CVec::Zero(4);
    spike[0] = 1.0;
    const auto one = verify_mt(id4, id4, spike, PExponent::of(1.0), SupportPolicy{},
                               RefNorm::lp);
    CHECK(one.lhs == doctest::Approx(1.0));
    CHECK(one.bound == doctest::Approx(1.0));
    CHECK(one.holds);

    // p = 2 at n = 9 with the spacing-3 comb saturates: 3 = 1/(1/3).
    const auto nine = verify_mt(identity_pair(9), dft_pair(9), dirac_comb(9, 3),
                                PExponent::of(2.0));
    CHECK(nine.lhs == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(nine.bound == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(nine.holds);

    // p = inf: the max-norm reference certifies the identity pair.
    const auto inf = verify_mt(id4, id4, spike, PExponent::infinity(), SupportPolicy{},
                               RefNorm::lp);
    CHECK(inf.holds);

    CHECK_THROWS_AS(verify_mt(id4, dft4, spike, PExponent::of(0.5)), RegimeError);
    // The DFT pair fails the l^1 identity, so p = 1 cannot be certified.
    CHECK_THROWS_AS(verify_mt(id4, dft4, spike, PExponent::of(1.0), SupportPolicy{},
                              RefNorm::lp),
                    ClassificationError);
}

TEST_CASE("uup on the worked examples") {
    const FramePair id = identity_pair(4);
    const FramePair dft = dft_pair(4);

    const auto comb = verify_uup(id, dft, dirac_comb(4, 2), PExponent::of(1.0));
    CHECK(comb.lhs == doctest::Approx(4.0));
    CHECK(comb.bound == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(comb.holds);

    CVec spike = CVec::Zero(3);
    spike[1] = 1.0;
    const FramePair id3 = identity_pair(3);
    const auto self = verify_uup(id3, id3, spike, PExponent::infinity());
    CHECK(self.lhs == doctest::Approx(1.0));
    CHECK(self.bound == doctest::Approx(1.0));
    CHECK(self.holds);

    const auto nine = verify_uup(identity_pair(9), dft_pair(9), dirac_comb(9, 3),
                                 PExponent::of(1.0));
    CHECK(nine.lhs == doctest::Approx(9.0));
    CHECK(nine.bound == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(nine.holds);

    CHECK_THROWS_AS(verify_uup(id, dft, CVec::Ones(4), PExponent::of(2.0)), RegimeError);
    CHECK_THROWS_AS(verify_uup(id, dft, CVec::Ones(4), PExponent::of(0.5)), RegimeError);
}

TEST_CASE("discup, fi, si hold on a random biorthogonal corpus") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Eigen::Index> dim(1, 8);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Eigen::Index d = dim(rng);
        const Eigen::Index m_f = d + static_cast<Eigen::Index>(rng() % 4);
        const Eigen::Index m_g = d + static_cast<Eigen::Index>(rng() % 4);
        const FramePair f = random_biorthogonal_pair(d, m_f, rng());
        const FramePair g = random_biorthogonal_pair(d, m_g, rng());
        const CVec x = gaussian(d, rng);
        for (double pv : {0.25, 0.5, 0.75}) {
            const PExponent p = PExponent::of(pv);
            const auto discup = verify_discup(f, g, x, p);
            const auto fi = verify_fi(f, g, x, p);
            const auto si = verify_si(f, g, x, p);
            CHECK(discup.holds);
            CHECK(fi.holds);
            CHECK(si.holds);

            // Multiplying the two factor inequalities reproduces the product bound.
            const double qf = p_quasinorm(analyze(f, x), p);
            const double qg = p_quasinorm(analyze(g, x), p);
            const double reassembled = (fi.lhs * si.lhs) / (qf * qg);
            CHECK(reassembled ==
                  doctest::Approx(discup.lhs).epsilon(1e-9));
            ++checked;
        }
    }
    CHECK(checked == 900);
}

TEST_CASE("reports are scale invariant under the exact policy") {
    std::mt19937_64 rng(515);
    const SupportPolicy exact = SupportPolicy::exact();
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 5);
        const FramePair f = random_biorthogonal_pair(d, d, rng());
        const FramePair g = random_biorthogonal_pair(d, d, rng());
        const CVec x = gaussian(d, rng);
        const std::complex<double> lambda(0.0, -1e4);
        const auto base = verify_discup(f, g, x, PExponent::of(0.5), exact);
        const auto scaled = verify_discup(f, g, CVec(lambda * x), PExponent::of(0.5), exact);
        CHECK(base.supports[0] == scaled.supports[0]);
        CHECK(base.supports[1] == scaled.supports[1]);
        CHECK(base.holds == scaled.holds);
    }
}

TEST_CASE("compare_bounds orders the three bounds") {
    const FramePair id = identity_pair(4);
    const FramePair dft = dft_pair(4);
    const auto rows = compare_bounds(id, dft, {0.5});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].discup_bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rows[0].uup_bound == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rows[0].rt_bound == doctest::Approx(4.0).epsilon(1e-12));

    const auto nine = compare_bounds(identity_pair(9), dft_pair(9), {0.5});
    CHECK(nine[0].discup_bound == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(nine[0].uup_bound == doctest::Approx(9.0).epsilon(1e-12));

    // Monotone in p and capped by the p = 1 bound; matches at the limit.
    std::vector<double> grid;
    for (int i = 1; i <= 9; ++i) grid.push_back(0.1 * i);
    grid.push_back(1.0 - 1e-11);
    const auto sweep = compare_bounds(id, dft, grid);
    double prev = 0.0;
    for (const auto& row : sweep) {
        CHECK(row.discup_bound > prev);
        CHECK(row.discup_bound < row.uup_bound);
        prev = row.discup_bound;
    }
    CHECK(sweep.back().discup_bound ==
          doctest::Approx(sweep.back().uup_bound).epsilon(1e-9));

    CHECK_THROWS_AS(compare_bounds(id, dft, {}), InputError);
    CHECK_THROWS_AS(compare_bounds(id, dft, {1.5}), RegimeError);
    const FramePair broken(CMat::Identity(4, 4), CMat::Zero(4, 4), 1.0);
    CHECK_THROWS_AS(compare_bounds(id, broken, {0.5}), DegenerateBoundError);
}

TEST_CASE("discup bound is strictly increasing in p when coherences are small") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index d = 3 + static_cast<Eigen::Index>(rng() % 4);
        const FramePair f = identity_pair(d);
        const FramePair g = dft_pair(d);
        std::vector<double> grid{0.2, 0.4, 0.6, 0.8};
        const auto rows = compare_bounds(f, g, grid);
        for (size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].discup_bound > rows[i - 1].discup_bound);
        }
    }
}
