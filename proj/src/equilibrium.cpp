#include "railcap/equilibrium.hpp"

#include <cmath>
#include <string>

#include "railcap/errors.hpp"

namespace railcap {

MsneInput::MsneInput(Eigen::VectorXd ell) : ell_(std::move(ell)) {
    if (ell_.size() < 2) throw DomainError("equilibrium needs at least two competing suppliers");
    for (Eigen::Index i = 0; i < ell_.size(); ++i)
        if (!(ell_[i] > 0.0 && ell_[i] <= 1.0))
            throw DomainError("ell[" + std::to_string(i) + "] = " + std::to_string(ell_[i]) +
                              " is outside (0, 1]");
}

namespace {

// Geometric-mean style root of the full product, computed in log space.
double scale(const Eigen::VectorXd& ell) {
    const auto n = static_cast<double>(ell.size());
    return std::exp(ell.array().log().sum() / (n - 1.0));
}

}  // namespace

double msne_cdf_value(const MsneInput& input, std::size_t i, double tolerance) {
    if (i >= input.size()) throw DomainError("msne_cdf_value: supplier index out of range");
    const double value = scale(input.ell()) / input.ell()[static_cast<Eigen::Index>(i)];
    if (value > 1.0 + tolerance)
        throw InfeasibleProfile("ell profile is infeasible: F[" + std::to_string(i) +
                                "] = " + std::to_string(value) + " > 1");
    return value;
}

Eigen::VectorXd msne_cdf_values(const MsneInput& input, double tolerance) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(input.size()));
    for (std::size_t i = 0; i < input.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = msne_cdf_value(input, i, tolerance);
    return out;
}

IndifferenceCheck verify_indifference(const MsneInput& input, const Eigen::VectorXd& cdf,
                                      double tolerance) {
    if (static_cast<std::size_t>(cdf.size()) != input.size())
        throw DomainError("verify_indifference: dimension mismatch");
    const auto n = cdf.size();
    IndifferenceCheck out{true, Eigen::VectorXd(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        double others = 1.0;
        for (Eigen::Index j = 0; j < n; ++j)
            if (j != i) others *= cdf[j];
        out.residuals[i] = others - input.ell()[i];
        if (!(std::abs(out.residuals[i]) <= tolerance)) out.holds = false;
    }
    return out;
}

}  // namespace railcap
