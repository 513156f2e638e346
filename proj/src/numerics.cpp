#include "pulsebunch/numerics.hpp"
#include "pulsebunch/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace pulsebunch {

namespace {

// Ascending series, adequate below x ~ 2 where the terms are monotone.
double bessel_j_series(int n, double x)
{
    const double half = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= half / k;
    double sum = term;
    const double m = -half * half;
    for (int j = 1; j < 64; ++j) {
        term *= m / (j * double(j + n));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

} // namespace

std::vector<double> bessel_jn_array(int n_max, double x)
{
    std::vector<double> out(n_max + 1, 0.0);
    if (x < 0) {
        out = bessel_jn_array(n_max, -x);
        for (int n = 1; n <= n_max; n += 2) out[n] = -out[n];
        return out;
    }
    if (x < 2.0) {
        for (int n = 0; n <= n_max; ++n) out[n] = bessel_j_series(n, x);
        return out;
    }
    // Miller downward recurrence, normalized by J_0 + 2(J_2 + J_4 + ...) = 1.
    const int base = std::max(n_max, int(x));
    const int start = 2 * ((base + 18 + int(std::sqrt(42.0 * base))) / 2);
    double above = 0.0, here = 1e-300, even = 0.0;
    for (int k = start; k >= 0; --k) {
        if (k <= n_max) out[k] = here;
        if (k % 2 == 0) even += (k == 0) ? here : 2.0 * here;
        if (k == 0) break;
        const double below = (2.0 * k / x) * here - above;
        above = here;
        here = below;
        if (std::abs(here) > 1e250) {
            here *= 1e-250;
            above *= 1e-250;
            even *= 1e-250;
            for (auto& v : out) v *= 1e-250;
        }
    }
    for (auto& v : out) v /= even;
    return out;
}

double bessel_j(int order, double x)
{
    int n = order;
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        if (n % 2 == 1) sign = -sign;
    }
    if (x < 0) {
        x = -x;
        if (n % 2 == 1) sign = -sign;
    }
    return sign * bessel_jn_array(n, x)[n];
}

double bessel_i0(double x)
{
    x = std::abs(x);
    if (x > 713.0) throw std::overflow_error("bessel_i0: argument too large for double range");
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (double(k) * k);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

double scaled_j(int k, double y)
{
    return scaled_j_array(k, y)[k];
}

std::vector<double> scaled_j_array(int k_max, double y)
{
    std::vector<double> out(k_max + 1);
    if (y < 0) throw std::invalid_argument("scaled_j: y must be >= 0");
    if (y <= 9.0) {
        // entire-series form: j_k(y) = sum_j (-1)^j y^j / (j! (k+j)!)
        for (int k = 0; k <= k_max; ++k) {
            double fact = 1.0;
            for (int i = 2; i <= k; ++i) fact *= i;
            double term = 1.0 / fact;
            double sum = term;
            for (int j = 1; j < 80; ++j) {
                term *= -y / (double(j) * (k + j));
                sum += term;
                if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300 && j > y) break;
            }
            out[k] = sum;
        }
        return out;
    }
    const double x = 2.0 * std::sqrt(y);
    const auto jn = bessel_jn_array(k_max, x);
    const double lg = 0.5 * std::log(y);
    for (int k = 0; k <= k_max; ++k) out[k] = jn[k] * std::exp(-k * lg);
    return out;
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights (positive half; node 0 included once).
constexpr double kron_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kron_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    std::complex<double> i15;
    double err;
};

PanelEstimate gk15(const std::function<std::complex<double>(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kron_x[i]);
        fv[14 - i] = f(c + h * kron_x[i]);
    }
    fv[7] = f(c);
    std::complex<double> i15{0, 0}, i7{0, 0};
    for (int i = 0; i < 7; ++i) i15 += kron_w[i] * (fv[i] + fv[14 - i]);
    i15 += kron_w[7] * fv[7];
    // Gauss nodes are the odd Kronrod ones
    for (int i = 0; i < 3; ++i) i7 += gauss_w[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    i7 += gauss_w[3] * fv[7];
    i15 *= h;
    i7 *= h;
    double err = std::abs(i15 - i7);
    return {i15, err};
}

void gk_adapt(const std::function<std::complex<double>(double)>& f, double a, double b,
              double abs_tol, double rel_tol, int depth,
              std::complex<double>& acc, double& errAcc, bool& converged)
{
    auto est = gk15(f, a, b);
    const double tol = std::max(abs_tol, rel_tol * std::abs(est.i15));
    if (est.err <= tol || (b - a) < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
        acc += est.i15;
        errAcc += est.err;
        return;
    }
    if (depth <= 0) {
        acc += est.i15;
        errAcc += est.err;
        converged = false;
        return;
    }
    const double c = 0.5 * (a + b);
    gk_adapt(f, a, c, 0.5 * abs_tol, rel_tol, depth - 1, acc, errAcc, converged);
    gk_adapt(f, c, b, 0.5 * abs_tol, rel_tol, depth - 1, acc, errAcc, converged);
}

} // namespace

QuadratureResult try_integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadratureSpec& spec)
{
    if (spec.abs_tol <= 0 || spec.rel_tol <= 0 || spec.max_depth < 1)
        throw std::invalid_argument("QuadratureSpec: tolerances must be > 0 and depth >= 1");
    if (a > b) throw std::invalid_argument("integrate_complex: requires a <= b");
    QuadratureResult r;
    if (a == b) return r;
    gk_adapt(f, a, b, spec.abs_tol, spec.rel_tol, spec.max_depth, r.value, r.error, r.converged);
    return r;
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadratureSpec& spec)
{
    auto r = try_integrate_complex(f, a, b, spec);
    if (!r.converged) {
        std::ostringstream os;
        os << "integrate_complex: depth " << spec.max_depth
           << " exhausted on [" << a << ", " << b << "], error estimate " << r.error;
        throw QuadratureError(os.str());
    }
    return r.value;
}

std::vector<double> find_roots(const std::function<double(double)>& g,
                               double a, double b, int expected, int scan_samples)
{
    if (!(b >= a)) throw std::invalid_argument("find_roots: requires a <= b");
    if (scan_samples < 2) scan_samples = 2;
    std::vector<double> roots;
    const double dx = (b - a) / scan_samples;
    double x0 = a, g0 = g(a);
    if (g0 == 0.0) roots.push_back(a);
    for (int i = 1; i <= scan_samples; ++i) {
        const double x1 = (i == scan_samples) ? b : a + i * dx;
        const double g1 = g(x1);
        if (g1 == 0.0) {
            roots.push_back(x1);
        } else if (g0 != 0.0 && std::signbit(g0) != std::signbit(g1)) {
            // bisection with secant acceleration
            double lo = x0, hi = x1, glo = g0, ghi = g1;
            const double xtol = 1e-10 * std::max({1.0, std::abs(lo), std::abs(hi)});
            for (int it = 0; it < 200 && (hi - lo) > xtol; ++it) {
                double mid = lo + (hi - lo) * (-glo / (ghi - glo)); // secant
                const double margin = 0.01 * (hi - lo);
                if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (std::signbit(gm) == std::signbit(glo)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                    ghi = gm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        g0 = g1;
    }
    std::sort(roots.begin(), roots.end());
    // merge duplicates from roots landing exactly on scan nodes
    std::vector<double> unique;
    for (double r : roots) {
        if (unique.empty() || r - unique.back() > 1e-9 * std::max(1.0, std::abs(r)))
            unique.push_back(r);
    }
    if (expected >= 0 && int(unique.size()) != expected) {
        std::ostringstream os;
        os << "find_roots: found " << unique.size() << " roots on [" << a << ", " << b
           << "], expected " << expected;
        throw RootCountError(os.str(), int(unique.size()), expected);
    }
    return unique;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

} // namespace pulsebunch
