#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace railcap {

/// Ratios ell_i = o_i / (pi_i + pi'_i) of the n >= 2 suppliers competing
/// for capacity (G1 and G2 together). Expected revenues o_i are inputs;
/// they are not solved for here.
class MsneInput {
public:
    /// Throws DomainError unless n >= 2 and every ratio lies in (0, 1].
    explicit MsneInput(Eigen::VectorXd ell);

    std::size_t size() const { return static_cast<std::size_t>(ell_.size()); }
    const Eigen::VectorXd& ell() const { return ell_; }

private:
    Eigen::VectorXd ell_;
};

/// Equilibrium CDF value of supplier i,
///   F_i = ( prod_{j != i} ell_j / ell_i^{n-2} )^{1/(n-1)},
/// evaluated as P^{1/(n-1)} / ell_i with P the product of all ratios.
/// Throws InfeasibleProfile when the value exceeds 1 + tolerance.
double msne_cdf_value(const MsneInput& input, std::size_t i, double tolerance = 1e-12);

/// All n CDF values; same feasibility check as msne_cdf_value.
Eigen::VectorXd msne_cdf_values(const MsneInput& input, double tolerance = 1e-12);

struct IndifferenceCheck {
    bool holds = false;
    Eigen::VectorXd residuals;  // prod_{j != i} F_j - ell_i
};

/// Checks that every supplier is indifferent: the product of the other
/// suppliers' CDF values equals its own ratio.
IndifferenceCheck verify_indifference(const MsneInput& input, const Eigen::VectorXd& cdf,
                                      double tolerance = 1e-12);

}  // namespace railcap
