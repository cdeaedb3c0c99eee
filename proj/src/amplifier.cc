#include "qbs/amplifier.h"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qbs {

namespace {

void check_parameter(double a) {
    if (!(a >= 0 && a <= 4)) {
        throw std::domain_error("logistic parameter a = " + std::to_string(a) + " outside [0, 4]");
    }
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Extra iterations beyond 2n when probing, so a k_min past the budget is still reported.
int probe_cap(int n) { return 4 * n + 64; }

}  // namespace

AmplifierConfig AmplifierConfig::for_width(int n, double a) { return AmplifierConfig{a, 2 * n}; }

void AmplifierConfig::validate() const {
    check_parameter(a);
    if (k_max < 0) {
        throw std::invalid_argument("k_max must be non-negative");
    }
}

double logistic_step(double x, double a) {
    check_parameter(a);
    if (!(x >= 0 && x <= 1)) {
        throw std::domain_error("logistic state x = " + std::to_string(x) + " outside [0, 1]");
    }
    return a * x * (1 - x);
}

QubitDensity amplifier_input(double x) { return QubitDensity::diagonal((1 + x) / 2, (1 - x) / 2); }

QubitDensity channel_apply(const QubitDensity& rho, double a) {
    if (!rho.is_diagonal(1e-12)) {
        throw std::invalid_argument("amplifier channel needs a diagonal input");
    }
    double x = logistic_step(rho.bloch_z(), a);
    return amplifier_input(x);
}

ChannelState channel_apply(const ChannelState& state, double a) { return {logistic_step(state.z, a)}; }

AmplifierTrace detect(double p, const AmplifierConfig& config) {
    config.validate();
    if (!(p >= 0 && p <= 1)) {
        throw std::domain_error("weight p = " + std::to_string(p) + " outside [0, 1]");
    }
    AmplifierTrace trace;
    trace.xs.push_back(p);
    for (int j = 0;; j++) {
        if (trace.xs.back() > kDetectionThreshold) {
            trace.detected = true;
            trace.k = j;
            break;
        }
        if (j == config.k_max) {
            break;
        }
        trace.xs.push_back(logistic_step(trace.xs.back(), config.a));
    }
    return trace;
}

std::optional<int> min_crossing(double x0, double a, int k_cap) {
    check_parameter(a);
    double x = x0;
    for (int k = 0; k <= k_cap; k++) {
        if (x > kDetectionThreshold) {
            return k;
        }
        x = logistic_step(x, a);
    }
    return std::nullopt;
}

void write_trajectory_csv(std::ostream& out, const AmplifierTrace& trace) {
    out << "k,x\n";
    for (size_t k = 0; k < trace.xs.size(); k++) {
        out << k << ',' << format_real(trace.xs[k]) << '\n';
    }
}

TheoremReport theorem_report(int n_lo, int n_hi, double a) {
    check_parameter(a);
    if (n_lo < 1 || n_hi < n_lo) {
        throw std::invalid_argument("need 1 <= n_lo <= n_hi");
    }
    static const double kGrowth = std::log2(kDefaultLogisticParameter) - 1;
    TheoremReport report;
    report.a = a;
    for (int n = n_lo; n <= n_hi; n++) {
        TheoremRow row;
        row.n = n;
        row.x0 = std::ldexp(1.0, -n);
        row.underflow = row.x0 == 0 || row.x0 < DBL_MIN;
        row.bound_2n = 2 * n;
        row.bound_eq7 = (n - 1) / kGrowth;
        row.bound_54 = (5LL * (n - 1)) / 4 + 1;
        row.k_min = min_crossing(row.x0, a, probe_cap(n));
        if (row.k_min) {
            int k = *row.k_min;
            row.thm1_holds = k <= row.bound_2n;
            row.eq7_as_upper_holds = k <= std::ceil(row.bound_eq7);
            // k > 5/4 (n - 1)  <=>  4k > 5(n - 1)
            row.eq7_as_stated_holds = k > row.bound_eq7 && 4LL * k > 5LL * (n - 1);
        }
        report.rows.push_back(row);
    }
    return report;
}

void write_theorem_csv(std::ostream& out, const TheoremReport& report) {
    out << "n,x0,k_min,bound_2n,bound_eq7,bound_54,thm1_holds,eq7_as_upper_holds,eq7_as_stated_holds,underflow\n";
    for (const auto& r : report.rows) {
        out << r.n << ',' << format_real(r.x0) << ',' << (r.k_min ? std::to_string(*r.k_min) : "") << ','
            << r.bound_2n << ',' << format_real(r.bound_eq7) << ',' << r.bound_54 << ',' << r.thm1_holds << ','
            << r.eq7_as_upper_holds << ',' << r.eq7_as_stated_holds << ',' << r.underflow << '\n';
    }
}

}  // namespace qbs
