#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "mcz/quadratic.hpp"

namespace mcz {

using Cplx = std::complex<double>;

inline constexpr double euler_gamma = 0.5772156649015328606065120900824024;

struct EvalResult {
    Cplx value;
    double est_error;  // an estimate, not a bound
    std::string method;
};

/// Principal-branch log-gamma (Lanczos, with reflection for Re < 1/2).
Cplx log_gamma(Cplx s);

/// Gamma via exp(log_gamma) with value-level reflection.
Cplx gamma_fn(Cplx s);

/// Logarithmic derivative of Gamma (asymptotic series + recurrence shift).
Cplx digamma(Cplx s);

/// Euler-Maclaurin evaluation of zeta(s, alpha), continued to all s != 1.
EvalResult hurwitz_zeta(Cplx s, double alpha);

EvalResult riemann_zeta(Cplx s);

/// L(chi_{-4}, s) = 4^{-s} (zeta(s,1/4) - zeta(s,3/4)); entire, valid at s=1.
EvalResult dirichlet_beta(Cplx s);

/// |Delta|^{-s} sum_r chi_K(r) zeta(s, r/|Delta|); continuation past Re(s)=1.
EvalResult L_chi(const QuadraticField& field, Cplx s);

/// zeta(s) * L(chi_{-4}, s), the Dedekind zeta of Q(i).
EvalResult zeta_qi(Cplx s);

/// Truncated Euler product over primes <= P; requires Re(s) > 1.
Cplx euler_product_qi(Cplx s, std::int64_t P);

/// zeta_qi(s)^{2^{level-1}}.
EvalResult zeta_bqn(int level, Cplx s);

/// Symmetric relative residual |LHS - RHS| / (|LHS| + |RHS|) of the
/// completed-function reflection identity at level n.
double functional_eq_residual(int level, Cplx s);

struct GammaQiConstant {
    double closed_form;        // (pi/2)(gamma + log 2 + 3/2 log pi - 2 log Gamma(1/4))
    double alternate_form;     // (pi/4) log(2 pi e^{2 gamma} Gamma(3/4)^2 / Gamma(1/4)^2)
    double finite_difference;  // L'(chi_{-4},1) by central difference, plus gamma L(chi_{-4},1)
};

GammaQiConstant gamma_qi_constant();

/// gamma + L'(chi_{-4},1)/L(chi_{-4},1), via the log closed form.
double sierpinski_constant();

/// The exponential-series form, truncated at k_max terms.
double sierpinski_series(int k_max = 40);

/// Finite-difference route through dirichlet_beta.
double sierpinski_from_derivative();

}  // namespace mcz
