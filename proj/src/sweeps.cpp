#include "fef/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "fef/fef.hpp"
#include "fef/state_io.hpp"
#include "fef/tripartite.hpp"

namespace fef {

namespace {

// Bisection on [lo, hi] assuming f(lo) and f(hi) have opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double f_lo, double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void append_crossings(const std::function<double(double)>& f,
                      const std::vector<double>& xs,
                      const std::vector<double>& values,
                      const std::string& curve,
                      std::vector<ThresholdCrossing>& out) {
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
        if ((values[k] < 0.0) != (values[k + 1] < 0.0)) {
            const double x =
                bisect(f, xs[k], xs[k + 1], values[k], 1e-4);
            out.push_back({curve, x});
        }
    }
}

}  // namespace

ThresholdSweep sweep_thresholds(int steps) {
    if (steps < 2) {
        throw Error(ErrorKind::OutOfRange,
                    "sweep_thresholds: steps must be >= 2, got " +
                        std::to_string(steps));
    }
    const GeneratorBasis basis = build_generator_basis(3);
    const auto fid = [&](double x) {
        return fidelity(product_noise_family(x)) - 1.0 / 3.0;
    };
    const auto bnd = [&](double x) {
        return fef_upper_bound(product_noise_family(x), basis) - 1.0 / 3.0;
    };

    ThresholdSweep sweep;
    sweep.rows.reserve(steps + 1);
    std::vector<double> xs, fids, bnds;
    for (int k = 0; k <= steps; ++k) {
        const double x = double(k) / steps;
        ThresholdRow row;
        row.x = x;
        row.fidelity_minus_third = fid(x);
        row.bound_minus_third = bnd(x);
        sweep.rows.push_back(row);
        xs.push_back(x);
        fids.push_back(row.fidelity_minus_third);
        bnds.push_back(row.bound_minus_third);
    }
    append_crossings(fid, xs, fids, "fidelity_minus_third", sweep.crossings);
    append_crossings(bnd, xs, bnds, "bound_minus_third", sweep.crossings);
    return sweep;
}

std::vector<WTradeoffRow> sweep_w_tradeoff(int steps) {
    if (steps < 2) {
        throw Error(ErrorKind::OutOfRange,
                    "sweep_w_tradeoff: steps must be >= 2, got " +
                        std::to_string(steps));
    }
    std::vector<WTradeoffRow> rows;
    rows.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        const double gamma = double(k) / steps;
        const double ab = std::sqrt(std::max((1.0 - gamma * gamma) / 2.0, 0.0));
        const WParams p = make_w_params(ab, ab, gamma);
        const WClosedForms closed = w_closed_forms(p);

        // Independent matrix path: reduce the explicit state, run the
        // two-qubit formula and the Schmidt-based concurrence.
        const TriPureState psi = w_state(p);
        const double fef_n_matrix =
            normalized_fef(fef_two_qubit_kyfan(reduced_ab(psi)));
        const double c_matrix = concurrence_ab_c(psi);
        if (std::abs(closed.fef_n - fef_n_matrix) > 1e-9 ||
            std::abs(closed.concurrence - c_matrix) > 1e-9) {
            throw std::logic_error(
                "sweep_w_tradeoff: closed forms disagree with matrix path "
                "at gamma = " +
                std::to_string(gamma));
        }

        WTradeoffRow row;
        row.gamma = gamma;
        row.fef_n = closed.fef_n;
        row.bound =
            std::sqrt(std::max(1.0 - closed.concurrence * closed.concurrence,
                               0.0));
        rows.push_back(row);
    }
    return rows;
}

std::string format_g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string threshold_csv(const ThresholdSweep& sweep) {
    std::string out = "x,fidelity_minus_third,bound_minus_third\n";
    for (const ThresholdRow& row : sweep.rows) {
        out += format_g17(row.x);
        out += ',';
        out += format_g17(row.fidelity_minus_third);
        out += ',';
        out += format_g17(row.bound_minus_third);
        out += '\n';
    }
    return out;
}

std::string w_tradeoff_csv(const std::vector<WTradeoffRow>& rows) {
    std::string out = "gamma,fef_n,bound\n";
    for (const WTradeoffRow& row : rows) {
        out += format_g17(row.gamma);
        out += ',';
        out += format_g17(row.fef_n);
        out += ',';
        out += format_g17(row.bound);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw IoError("cannot write file: " + tmp);
        }
        out << content;
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move file into place: " + path + ": " +
                      ec.message());
    }
}

}  // namespace fef
