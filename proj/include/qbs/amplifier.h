#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "qbs/state.h"

namespace qbs {

constexpr double kDefaultLogisticParameter = 3.71;
constexpr double kDetectionThreshold = 0.5;

struct AmplifierConfig {
    double a = kDefaultLogisticParameter;
    int k_max = 0;

    /// a = 3.71 with the budget J = {0, ..., 2n}.
    static AmplifierConfig for_width(int n, double a = kDefaultLogisticParameter);
    void validate() const;
};

struct AmplifierTrace {
    /// x_0 = p, x_{j+1} = a x_j (1 - x_j). Stops at the first crossing.
    std::vector<double> xs;
    bool detected = false;
    /// First index with x_k > 1/2.
    std::optional<int> k;

    /// Channel applications performed (trajectory length minus one).
    int steps() const { return static_cast<int>(xs.size()) - 1; }
};

/// g_a(x) = a x (1 - x). Throws std::domain_error outside x in [0,1], a in [0,4].
double logistic_step(double x, double a);

/// (I + sigma_3 x) / 2, the input form whose sigma_3 expectation is x.
QubitDensity amplifier_input(double x);

/// Lambda_CA(rho) = (I + g_a(tr rho sigma_3) sigma_3) / 2.
/// Throws std::invalid_argument when rho is not diagonal within 1e-12.
///
/// Reading tr(rho sigma_3) back from the matrix entries costs up to one ulp of
/// 1/2 per step, which the chaotic map amplifies. Use ChannelState to iterate.
QubitDensity channel_apply(const QubitDensity& rho, double a);

/// Diagonal state (I + z sigma_3) / 2 stored by its sigma_3 expectation z, so
/// repeated channel applications lose nothing to the matrix encoding.
struct ChannelState {
    double z = 0;

    QubitDensity density() const { return amplifier_input(z); }
};

ChannelState channel_apply(const ChannelState& state, double a);

/// Runs the amplifier on p: checks x_0 first, then iterates up to config.k_max.
AmplifierTrace detect(double p, const AmplifierConfig& config);

/// Smallest k <= k_cap with g_a^k(x0) > 1/2.
std::optional<int> min_crossing(double x0, double a, int k_cap);

/// `k,x` CSV with 17 significant digits.
void write_trajectory_csv(std::ostream& out, const AmplifierTrace& trace);

struct TheoremRow {
    int n = 0;
    double x0 = 0;
    std::optional<int> k_min;
    int bound_2n = 0;
    /// (n - 1) / (log2 3.71 - 1), the growth-rate bound.
    double bound_eq7 = 0;
    /// floor(5/4 (n - 1)) + 1.
    long long bound_54 = 0;
    /// k_min exists and k_min <= 2n.
    bool thm1_holds = false;
    /// k_min <= ceil(bound_eq7).
    bool eq7_as_upper_holds = false;
    /// k_min > bound_eq7 and k_min > 5/4 (n - 1), the lower-bound reading.
    bool eq7_as_stated_holds = false;
    /// x0 underflowed to zero or lost precision.
    bool underflow = false;
};

struct TheoremReport {
    double a = kDefaultLogisticParameter;
    std::vector<TheoremRow> rows;
};

/// Crossing sweep for x0 = 2^-n, n in [n_lo, n_hi].
TheoremReport theorem_report(int n_lo, int n_hi, double a = kDefaultLogisticParameter);

void write_theorem_csv(std::ostream& out, const TheoremReport& report);

}  // namespace qbs
