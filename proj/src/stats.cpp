#include "uflab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uflab {

WilsonInterval wilson_interval(int64_t successes, int64_t trials, double z) {
    if (trials < 1) throw std::invalid_argument("wilson interval requires trials >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("successes must lie in [0, trials]");
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double centre = (phat + z2 / (2.0 * n)) / denom;
    double half = (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    WilsonInterval w;
    w.estimate = phat;
    // Clamp against rounding: the interval always contains the estimate.
    w.lower = std::min(std::max(0.0, centre - half), phat);
    w.upper = std::max(std::min(1.0, centre + half), phat);
    w.z = z;
    return w;
}

namespace {

// Least squares of y on a single regressor u (plus intercept).
FitResult regress(const std::vector<std::pair<double, double>>& uy) {
    const double n = static_cast<double>(uy.size());
    double su = 0, sy = 0, suu = 0, suy = 0, syy = 0;
    for (auto [u, y] : uy) {
        su += u;
        sy += y;
        suu += u * u;
        suy += u * y;
        syy += y * y;
    }
    double det = n * suu - su * su;
    if (det <= 0) throw std::invalid_argument("degenerate fit: regressor has no spread");
    double slope = (n * suy - su * sy) / det;
    double intercept = (sy - slope * su) / n;
    double ss_tot = syy - sy * sy / n;
    double ss_res = 0;
    for (auto [u, y] : uy) {
        double r = y - (slope * u + intercept);
        ss_res += r * r;
    }
    FitResult f;
    f.a = slope;
    f.b = intercept;
    f.r2 = ss_tot > 0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    if (uy.size() > 2) {
        double sigma2 = ss_res / (n - 2.0);
        f.intercept_stderr = std::sqrt(sigma2 * suu / det);
    }
    return f;
}

}  // namespace

FitResult fit_hyperbolic(const std::vector<std::pair<double, double>>& points) {
    std::vector<double> ds;
    for (auto [d, y] : points) ds.push_back(d);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.size() < 3) throw std::invalid_argument("hyperbolic fit needs >= 3 distinct d");
    std::vector<std::pair<double, double>> uy;
    for (auto [d, y] : points) uy.push_back({1.0 / d, y});
    FitResult lin = regress(uy);
    FitResult f;
    f.a = lin.b;       // intercept: the d -> infinity limit
    f.b = -lin.a;      // y = A - B/d
    f.r2 = lin.r2;
    f.intercept_stderr = lin.intercept_stderr;
    return f;
}

FitResult fit_linear(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("linear fit needs >= 2 points");
    return regress(points);
}

FitResult fit_quadratic(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 4) throw std::invalid_argument("quadratic fit needs >= 4 points");
    const size_t n = points.size();
    // Normal equations for the design [x^2, x, 1].
    long double s[5] = {0, 0, 0, 0, 0};  // sums of x^k
    long double t[3] = {0, 0, 0};        // sums of y * x^k
    long double syy = 0, sy = 0;
    for (auto [x, y] : points) {
        long double xp = 1;
        for (int k = 0; k <= 4; ++k) {
            s[k] += xp;
            if (k <= 2) t[k] += y * xp;
            xp *= x;
        }
        sy += y;
        syy += static_cast<long double>(y) * y;
    }
    // A * beta = rhs with beta = (b, c, a) ordered by polynomial degree.
    long double A[3][3] = {{s[0], s[1], s[2]}, {s[1], s[2], s[3]}, {s[2], s[3], s[4]}};
    long double rhs[3] = {t[0], t[1], t[2]};
    auto det3 = [](const long double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    long double det = det3(A);
    if (std::abs(static_cast<double>(det)) < 1e-30)
        throw std::invalid_argument("quadratic fit is degenerate");
    long double beta[3];
    for (int col = 0; col < 3; ++col) {
        long double M[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) M[r][c] = (c == col) ? rhs[r] : A[r][c];
        beta[col] = det3(M) / det;
    }
    long double rss = 0;
    for (auto [x, y] : points) {
        long double pred = beta[0] + beta[1] * x + beta[2] * x * x;
        rss += (y - pred) * (y - pred);
    }
    long double tss = syy - sy * sy / static_cast<long double>(n);
    // Var(b) = s^2 * [(A^-1)]_00 with A^-1_00 via the cofactor.
    long double cof00 = A[1][1] * A[2][2] - A[1][2] * A[2][1];
    long double s2 = n > 3 ? rss / static_cast<long double>(n - 3) : 0.0L;
    FitResult f;
    f.a = static_cast<double>(beta[2]);
    f.b = static_cast<double>(beta[0]);
    f.r2 = tss > 0 ? static_cast<double>(1.0L - rss / tss) : 1.0;
    f.intercept_stderr = static_cast<double>(std::sqrt(static_cast<double>(s2 * cof00 / det)));
    return f;
}

bool logical_failure(const Lattice& lat, const ErrorSample& errors, const Correction& correction) {
    std::vector<uint8_t> residual = errors.edge_error;
    for (int32_t e : correction) residual[e] ^= 1;
    std::vector<int32_t> residual_edges;
    for (int32_t e = 0; e < lat.edge_count(); ++e)
        if (residual[e]) residual_edges.push_back(e);
    if (!syndrome_of_edges(lat, residual_edges).empty())
        throw std::runtime_error("correction does not reproduce the syndrome");

    auto odd_crossing = [&](CutAxis axis) {
        int parity = 0;
        for (int32_t e : lat.logical_cut(axis)) parity ^= residual[e];
        return parity != 0;
    };
    if (lat.kind() == CodeKind::planar) return odd_crossing(CutAxis::horizontal);
    return odd_crossing(CutAxis::horizontal) || odd_crossing(CutAxis::vertical);
}

std::vector<double> curve_crossings(const std::vector<double>& ps,
                                    const std::vector<double>& rates_low_d,
                                    const std::vector<double>& rates_high_d) {
    std::vector<double> crossings;
    for (size_t i = 0; i + 1 < ps.size(); ++i) {
        double f0 = rates_high_d[i] - rates_low_d[i];
        double f1 = rates_high_d[i + 1] - rates_low_d[i + 1];
        if (f0 == 0.0 && f1 == 0.0) continue;
        if ((f0 <= 0.0 && f1 > 0.0) || (f0 >= 0.0 && f1 < 0.0) || f0 == 0.0) {
            double t = f0 == f1 ? 0.0 : f0 / (f0 - f1);
            if (t >= 0.0 && t <= 1.0) crossings.push_back(ps[i] + t * (ps[i + 1] - ps[i]));
        }
    }
    return crossings;
}

}  // namespace uflab
