#pragma once

#include <cmath>
#include <stdexcept>

// Asymptotic rate-vs-distance curves (binary64 throughout, unlike the exact
// finite-length modules): the nondegenerate Hamming bound, the degenerate
// Hamming and LP1 bounds, the stabilizer and DS Gilbert-Varshamov curves and
// the syndrome-redundancy threshold rho*(R).

namespace qds {

inline constexpr double kLog2_3 = 1.5849625007211561815;  // log2(3)

/// Binary entropy; endpoints by continuity.
inline double entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Inverse of entropy on the branch [0, 1/2], by bisection.
inline double inv_entropy(double y) {
    if (y < 0.0 || y > 1.0) throw std::domain_error("inv_entropy: argument outside [0,1]");
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (entropy(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// The maximizer of H(i) + i log2(3) + (1-R) H((tau-i)/(1-R)) over i:
///   iota* = 1 - R/4 + tau/2 - (1/4) sqrt(16 - 8R - 8tau + R^2 - 4R tau + 4 tau^2).
inline double iota_star(double R, double tau) {
    if (R < 0.0 || R > 1.0 || tau < 0.0 || tau > 1.0)
        throw std::domain_error("iota_star: arguments outside [0,1]");
    double disc = 16.0 - 8.0 * R - 8.0 * tau + R * R - 4.0 * R * tau + 4.0 * tau * tau;
    if (disc < 0.0) throw std::logic_error("iota_star: negative discriminant");
    return 1.0 - 0.25 * R + 0.5 * tau - 0.25 * std::sqrt(disc);
}

/// The exponent of the sphere-size denominator in the nondegenerate Hamming
/// bound, at the optimal iota.
inline double hamming_exponent(double R, double tau) {
    double i = iota_star(R, tau);
    if (i < 0.0) i = 0.0;
    if (i > tau) i = tau;
    double inner = (1.0 - R) <= 0.0 ? 0.0 : (tau - i) / (1.0 - R);
    if (inner > 1.0) inner = 1.0;
    double h2 = (1.0 - R) <= 0.0 ? 0.0 : (1.0 - R) * entropy(inner);
    return entropy(i) + i * kLog2_3 + h2;
}

/// Nondegenerate asymptotic Hamming bound: the root R of
///   H(iota*) + iota* log2(3) + (1-R) H((delta/2 - iota*)/(1-R)) + R - 1 = 0.
inline double hamming_nondeg_rate(double delta) {
    if (delta < 0.0 || delta > 1.0) throw std::domain_error("hamming_nondeg_rate: delta outside [0,1]");
    double tau = delta / 2.0;
    auto residual = [tau](double R) { return hamming_exponent(R, tau) + R - 1.0; };
    double lo = 0.0, hi = 1.0;
    if (residual(lo) > 0.0) throw std::domain_error("hamming_nondeg_rate: no root on [0,1]");
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        (residual(mid) <= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Degenerate-code Hamming bound: R <= 1 - (delta/2) log2(3) - H(delta/2),
/// valid for 0 <= delta <= 1/3.
inline double hamming_deg_rate(double delta) {
    if (delta < 0.0 || delta > 1.0 / 3.0 + 1e-15)
        throw std::domain_error("hamming_deg_rate: delta outside [0,1/3]");
    return 1.0 - (delta / 2.0) * kLog2_3 - entropy(delta / 2.0);
}

/// First linear-programming bound:
///   R <= H(w) + w log2(3) - 1,  w = 3/4 - delta/2 - (1/2) sqrt(3 delta (1-delta)),
/// valid for 0 <= delta <= 0.3152.
inline double lp1_rate(double delta) {
    if (delta < 0.0 || delta > 0.3152 + 1e-12)
        throw std::domain_error("lp1_rate: delta outside [0,0.3152]");
    double w = 0.75 - 0.5 * delta - 0.5 * std::sqrt(3.0 * delta * (1.0 - delta));
    return entropy(w) + w * kLog2_3 - 1.0;
}

/// Stabilizer-code GV distance: the root of H(delta) + delta log2(3) = 1 - R.
inline double gv_stabilizer(double R) {
    if (R < 0.0 || R > 1.0) throw std::domain_error("gv_stabilizer: R outside [0,1]");
    auto lhs = [](double d) { return entropy(d) + d * kLog2_3; };
    double lo = 0.0, hi = 0.75;  // lhs is increasing up to its max at 3/4
    double target = 1.0 - R;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (lhs(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Inner expression of the DS GV bound at a trial iota:
///   xi(iota) = (1-R+rho) * Hinv(1 - (H(iota) + iota log2(3)) / (1-R+rho)),
/// and the candidate distance iota + xi(iota).  Feasible iota require the
/// Hinv argument to lie in [0,1].
inline double gv_ds(double R, double rho) {
    if (R < 0.0 || R > 1.0) throw std::domain_error("gv_ds: R outside [0,1]");
    if (rho < 0.0 || rho > 1.0 - R + 1e-12) throw std::domain_error("gv_ds: need 0 <= rho <= 1-R");
    double mu = 1.0 - R + rho;
    if (mu <= 0.0) return 0.0;

    auto candidate = [&](double iota) {
        double a = 1.0 - (entropy(iota) + iota * kLog2_3) / mu;
        if (a < 0.0 || a > 1.0) return -1.0;  // infeasible
        return iota + mu * inv_entropy(a);
    };

    // grid scan for a feasible bracket, then golden-section refinement
    const int grid = 2000;
    double hi_iota = gv_stabilizer(R);  // beyond this the H-argument goes negative
    double best = -1.0;
    double best_iota = 0.0;
    for (int g = 0; g <= grid; ++g) {
        double iota = hi_iota * g / grid;
        double v = candidate(iota);
        if (v >= 0.0 && (best < 0.0 || v < best)) {
            best = v;
            best_iota = iota;
        }
    }
    if (best < 0.0) throw std::domain_error("gv_ds: no feasible iota");
    double step = hi_iota / grid;
    double a = best_iota - step > 0.0 ? best_iota - step : 0.0;
    double b = best_iota + step < hi_iota ? best_iota + step : hi_iota;
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = candidate(x1), f2 = candidate(x2);
    if (f1 < 0.0) f1 = 2.0;
    if (f2 < 0.0) f2 = 2.0;
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = candidate(x1);
            if (f1 < 0.0) f1 = 2.0;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = candidate(x2);
            if (f2 < 0.0) f2 = 2.0;
        }
    }
    double inner = f1 < f2 ? f1 : f2;
    if (inner < best) best = inner;

    double dgv = gv_stabilizer(R);
    return best < dgv ? best : dgv;
}

/// Smallest rho with gv_ds(R, rho) >= gv_stabilizer(R) - 1e-9, by bisection.
/// Must come out strictly below 1-R.
inline double rho_star(double R) {
    if (R < 0.0 || R >= 1.0) throw std::domain_error("rho_star: R outside [0,1)");
    double target = gv_stabilizer(R) - 1e-9;
    double lo = 0.0, hi = 1.0 - R;
    if (gv_ds(R, lo) >= target) return 0.0;
    if (gv_ds(R, hi) < target)
        throw std::logic_error("rho_star: not reached below 1-R");
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (gv_ds(R, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qds
