//
// Special functions, adaptive quadrature for complex-valued oscillatory
// integrands, and bracketed root finding.  Everything here is pure and
// stateless; all functions are safe to call concurrently.
//

#ifndef PULSEBUNCH_NUMERICS_HPP
#define PULSEBUNCH_NUMERICS_HPP

#include <complex>
#include <functional>
#include <vector>

namespace pulsebunch {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 40;
};

struct SeriesTruncation {
    int k_max = 60;
    double cutoff = 1e-14;
};

// Bessel function of the first kind, integer order.  Negative orders use
// J_{-m}(x) = (-1)^m J_m(x), negative arguments J_m(-x) = (-1)^m J_m(x).
double bessel_j(int order, double x);

// J_0(x) .. J_{n_max}(x) in one downward-recurrence pass; x >= 0.
std::vector<double> bessel_jn_array(int n_max, double x);

// Modified Bessel function I_0(x).  Throws std::overflow_error once the
// result exceeds the double range (x > ~713).
double bessel_i0(double x);

// Scaled Bessel kernel j_k(y) = J_k(2*sqrt(y)) / y^(k/2) for y >= 0.
// Entire in y; j_k(0) = 1/k!.
double scaled_j(int k, double y);

// j_1(y) .. j_{k_max}(y) sharing one Bessel evaluation.  Index 0 of the
// result holds j_0(y) = J_0(2*sqrt(y)).
std::vector<double> scaled_j_array(int k_max, double y);

struct QuadratureResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod (7,15) on [a,b].  Subdivides until the local error
// estimate meets spec tolerances or max_depth is reached.
QuadratureResult try_integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadratureSpec& spec = {});

// As above but throws QuadratureError on non-convergence.
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const QuadratureSpec& spec = {});

// All sign-change roots of g on [a,b], located by a scan over `scan_samples`
// brackets followed by bisection/secant refinement to 1e-10 relative
// accuracy.  With expected >= 0 a count mismatch throws RootCountError.
std::vector<double> find_roots(const std::function<double(double)>& g,
                               double a, double b,
                               int expected = -1, int scan_samples = 2000);

// Gauss-Legendre nodes and weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace pulsebunch

#endif
