#pragma once

#include <Eigen/Core>
#include <complex>

#include "uncert/errors.hpp"

namespace uncert {

/// Finite coefficient sequence. Entries must be finite; length >= 1.
using CoeffSeq = Eigen::VectorXcd;

/// Exponent p in (0, inf], with the regime it falls in recorded up front.
/// The regimes matter because the norm convention changes at p = 1:
/// for p in (0, 1] the inhomogeneous sum sum |a_n|^p is used (no p-th root).
class PExponent {
public:
    enum class Regime { sub_one, one, super_one, infinite };

    static PExponent of(double p);
    static PExponent infinity();

    double value() const { return value_; }
    Regime regime() const { return regime_; }

    bool is_sub_one() const { return regime_ == Regime::sub_one; }
    bool is_infinite() const { return regime_ == Regime::infinite; }

private:
    PExponent(double v, Regime r) : value_(v), regime_(r) {}
    double value_;
    Regime regime_;
};

/// Tolerance rule turning floating-point coefficients into exact l0 counts.
/// An entry a counts as nonzero iff |a| > max(abs_floor, rel_tol * max_k |a_k|).
struct SupportPolicy {
    double rel_tol = 1e-10;
    double abs_floor = 1e-14;

    /// Counts exact nonzeros (|a| > 0).
    static SupportPolicy exact() { return SupportPolicy{0.0, 0.0}; }
};

struct GarlingReport {
    double lhs;  // (sum |a_n|)^p
    double rhs;  // sum |a_n|^p
    bool holds;
    bool equality;
};

/// Constant function c on a single set of measure m, with the two integrals
/// (integral |f|)^p = (c m)^p and integral |f|^p = c^p m.
struct ContinuousGarlingWitness {
    double measure_of_set;
    double constant_value;
    double lhs;
    double rhs;
};

/// |a|^p evaluated as exp(p * ln|a|), with |a| = 0 short-circuited to 0.
double pow_p(double magnitude, double p);

/// sum |a_n|^p for p in (0,1] (inhomogeneous), (sum |a_n|^p)^(1/p) for
/// p in (1,inf), max |a_n| for p = inf.
double p_quasinorm(const CoeffSeq& a, const PExponent& p);

/// Number of entries classified nonzero under the policy.
Eigen::Index support_count(const CoeffSeq& a, const SupportPolicy& policy);

/// Checks (sum |a_n|)^p <= sum |a_n|^p for p in (0,1).
GarlingReport garling_check(const CoeffSeq& a, const PExponent& p);

/// Produces a one-set witness showing the integral form of the inequality
/// reverses on sets of measure < 1: (c m)^p > c^p m strictly.
ContinuousGarlingWitness continuous_garling_counterexample(const PExponent& p,
                                                           double measure = 0.5,
                                                           double constant = 1.0);

/// Throws InputError unless every entry is finite and the sequence is nonempty.
void validate_coeffs(const CoeffSeq& a);

} // namespace uncert
