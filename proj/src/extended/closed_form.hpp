#pragma once

#include <complex>
#include <vector>

#include "cheb/cheb.hpp"
#include "core/quadrature.hpp"

namespace grunwald {

/// Coefficients a_0..a_{n-1} (descending powers) of the monic polynomial
///     q_k(x) = prod_{j != k} (x - c_j),   c_j = cos(theta_j),
/// so that q_k(x) = sum_r a_r x^{n-1-r}.  a_r is the r-th signed elementary
/// symmetric function of the cosines with node k removed.
std::vector<double> elementary_coeffs(const ChebyshevGrid& grid, int k);

/// Exact value of
///     R_r(p) = Int_0^pi [cos^r(theta - h) + cos^r(theta + h)] e^{i p theta} dtheta
/// obtained by expanding cos^r into complex exponentials over the 2^r sign
/// patterns: with M(phi) = sum_j phi_j,
///     R_r(p) = (2 / 2^r) sum_phi cos(M h) [Ec(M, p) + i Es(M, p)],
///     Ec = (S(M+p) + S(M-p)) / 2,  S(a) = sin(a pi)/a          (S(0) = pi),
///     Es = (V(p+M) + V(p-M)) / 2,  V(a) = (1 - cos(a pi))/a    (V(0) = 0).
/// The enumeration is exponential in r; r is capped at 24.
std::complex<double> rr_term(const ChebyshevGrid& grid, int r, double p);

/// Closed form of the node transform
///     V_k(p) = Int_0^pi [P_k(theta - h) + P_k(theta + h)] e^{i p theta} dtheta
///            = (-1)^{k+1} (2^{n-1} sin(theta_k) / n) sum_r a_r R_{n-1-r}(p),
/// using that the leading coefficient of the degree-n first-kind Chebyshev
/// polynomial is 2^{n-1}, so prod_{j != k}(c_k - c_j) = n (-1)^{k+1} /
/// (2^{n-1} sin theta_k).  Exponential cost; the grid order is capped at 16.
std::complex<double> vk_closed_form(const ChebyshevGrid& grid, int k,
                                    double p);

/// The same transform evaluated by oscillation-aware quadrature; this is the
/// production path (no order cap).
std::complex<double> vk_quadrature(const ChebyshevGrid& grid, int k, double p,
                                   const QuadratureSpec& spec = {});

}  // namespace grunwald
