#pragma once

#include <string>
#include <vector>

#include "fef/state.hpp"
#include "fef/su_generators.hpp"

namespace fef {

/// Distillation-threshold sweep over the two-qutrit noise family:
/// fidelity and FEF upper bound against the 1/3 distillation threshold.
struct ThresholdRow {
    double x = 0.0;
    double fidelity_minus_third = 0.0;
    double bound_minus_third = 0.0;
};

struct ThresholdCrossing {
    std::string curve;  // "fidelity_minus_third" or "bound_minus_third"
    double x = 0.0;     // bisection-refined to 1e-4
};

struct ThresholdSweep {
    std::vector<ThresholdRow> rows;  // steps+1 rows, x = k/steps
    std::vector<ThresholdCrossing> crossings;
};

ThresholdSweep sweep_thresholds(int steps);

/// W-family sweep: normalized FEF of the AB pair vs the concurrence
/// tradeoff bound sqrt(1 - C^2), on the alpha = beta slice.
struct WTradeoffRow {
    double gamma = 0.0;
    double fef_n = 0.0;
    double bound = 0.0;
};

/// Rows for gamma = k/steps with alpha = beta = sqrt((1-gamma^2)/2).
/// Each row's closed forms are cross-checked against the matrix path
/// (reduced state + Ky Fan formula) to 1e-9.
std::vector<WTradeoffRow> sweep_w_tradeoff(int steps);

/// CSV with header `x,fidelity_minus_third,bound_minus_third`, LF line
/// endings, 17-significant-digit decimals (bit-identical across runs).
std::string threshold_csv(const ThresholdSweep& sweep);

/// CSV with header `gamma,fef_n,bound`, same formatting rules.
std::string w_tradeoff_csv(const std::vector<WTradeoffRow>& rows);

/// Atomic text-file write (temp + rename); IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

/// 17-significant-digit decimal, the project-wide CSV number format.
std::string format_g17(double value);

}  // namespace fef
