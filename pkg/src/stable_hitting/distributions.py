"""Density and characteristic-function evaluators for the named laws tied to
stable hitting times: beta-prime, alpha-Cauchy, Linnik, symmetric z-laws,
Meixner, and the alpha-Rayleigh survival function.

Characteristic functions are computed by real cosine quadrature throughout
(every law here is symmetric where a char-fn is needed), never by complex
arithmetic.  z and Meixner densities are evaluated in log space so large |x|
underflows gracefully instead of overflowing the intermediate exponentials.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from .errors import DomainError
from .numerics import (DEFAULT_SPEC, QuadSpec, _as_vectorized,
                       _cos_panel_series, integrate_adaptive,
                       integrate_oscillatory_cos)
from .resolvent import as_index, transition_density


def beta_prime_density(a: float, b: float, x: float) -> float:
    """Density of Gamma_a / Gamma_b at x > 0: x^{a-1} (1+x)^{-a-b} / B(a,b)."""
    if a <= 0 or b <= 0:
        raise DomainError("beta-prime shapes must be positive")
    if x <= 0:
        raise DomainError("beta-prime support is x > 0")
    return math.exp((a - 1.0) * math.log(x) - (a + b) * math.log1p(x)
                    - special.betaln(a, b))


def alpha_cauchy_density(alpha: float, x: float) -> float:
    """Density sin(pi/a)/(2 pi/a) * 1/(1+|x|^a) on the whole line, a > 1."""
    if alpha <= 1.0:
        raise DomainError("alpha-Cauchy density requires alpha > 1")
    c = math.sin(math.pi / alpha) / (2.0 * math.pi / alpha)
    return c / (1.0 + abs(x) ** alpha)


def linnik_density(alpha: float, x: float, spec: QuadSpec = DEFAULT_SPEC) -> float:
    """Density of the law with characteristic function 1/(1+|theta|^alpha),
    by cosine inversion: (1/pi) int_0^inf cos(x theta) / (1+theta^alpha) dtheta."""
    if not 0.0 < alpha <= 2.0:
        raise DomainError("Linnik index must lie in (0, 2]")
    return integrate_oscillatory_cos(
        lambda th: 1.0 / (1.0 + th ** alpha), x, spec) / math.pi


def alpha_cauchy_charfn(alpha: float, theta: float,
                        spec: QuadSpec = DEFAULT_SPEC) -> float:
    """E[e^{i theta C_alpha}] by cosine quadrature of the density."""
    if alpha <= 1.0:
        raise DomainError("alpha-Cauchy requires alpha > 1")
    return 2.0 * integrate_oscillatory_cos(
        lambda x: alpha_cauchy_density(alpha, x), theta, spec)


def relation_r_constant(alpha: float) -> float:
    """Constant of proportionality in E[e^{i th C_a}] = const * L_a(th).

    Fourier inversion of the Linnik char-fn fixes it as alpha * sin(pi/alpha):
    at theta = 0 the char-fn is 1 while L_a(0) = 1/(alpha sin(pi/alpha)) by
    the classical integral int_0^inf dt/(1+t^a) = (pi/a)/sin(pi/a).
    """
    return alpha * math.sin(math.pi / alpha)


def _softplus(y: float) -> float:
    return max(y, 0.0) + math.log1p(math.exp(-abs(y)))


def z_density(a: float, x: float) -> float:
    """Density of (1/pi) log(Gamma_a / Gamma_a'):
    pi e^{a pi x} / ((1+e^{pi x})^{2a} B(a,a)), evaluated in log space."""
    if a <= 0:
        raise DomainError("z-law shape must be positive")
    y = math.pi * x
    return math.exp(math.log(math.pi) - special.betaln(a, a)
                    + a * y - 2.0 * a * _softplus(y))


def z_levy_exponent(a: float, theta: float, spec: QuadSpec = DEFAULT_SPEC) -> float:
    """Levy exponent Phi_a of the symmetric z-process:
    2 int_0^inf (1 - cos(theta u)) e^{-a pi u} / (u (1 - e^{-pi u})) du.

    For small frequencies one adaptive pass is enough; for large ones the
    1 - cos part is split off the same way as the potential-kernel integral
    so the oscillation is summed as an alternating series."""
    if a <= 0:
        raise DomainError("shape must be positive")
    th = abs(theta)
    if th == 0.0:
        return 0.0

    def envelope(u):
        # e^{-a pi u} / (u (1 - e^{-pi u})); ~ 1/(pi u^2) at 0
        return np.exp(-a * math.pi * u) / (u * -np.expm1(-math.pi * u))

    def integrand(u):
        if u == 0.0:
            return th * th / (2.0 * math.pi)
        return 2.0 * math.sin(0.5 * th * u) ** 2 * envelope(u)

    # effective support of the envelope, then oscillation count
    u_max = 45.0 / (a * math.pi) + 2.0
    if th * u_max / (2.0 * math.pi) <= 8.0:
        return 2.0 * integrate_adaptive(integrand, 0.0, math.inf, spec)
    k_cut = 2
    z = (k_cut + 0.5) * math.pi / th
    head = integrate_adaptive(integrand, 0.0, z, spec)
    flat = integrate_adaptive(lambda u: envelope(u), z, math.inf, spec)
    cos_tail = _cos_panel_series(_as_vectorized(envelope), th, k_cut + 1,
                                 spec, base=head + flat)
    return 2.0 * (head + flat - cos_tail)


def meixner_density(beta: float, t: float, x: float,
                    spec: QuadSpec = DEFAULT_SPEC) -> float:
    """Meixner density at time t with asymmetry beta in (-pi, pi):
    (2 cos(beta/2))^t B(t/2, t/2) / (2 pi) * e^{beta x - Phi_{t/2}(pi x)}.

    The exponent argument is pi x: |Gamma(t/2 + ix)|^2 equals
    Gamma(t/2)^2 e^{-Phi_{t/2}(pi x)} since Phi_a absorbs a 1/pi rescaling.
    """
    if abs(beta) >= math.pi:
        raise DomainError("Meixner asymmetry must satisfy |beta| < pi")
    if t <= 0:
        raise DomainError("t must be positive")
    log_norm = (t * math.log(2.0 * math.cos(0.5 * beta))
                + special.betaln(0.5 * t, 0.5 * t) - math.log(2.0 * math.pi))
    return math.exp(log_norm + beta * x - z_levy_exponent(0.5 * t, math.pi * x, spec))


def alpha_rayleigh_survival(alpha: float, x: float,
                            spec: QuadSpec | None = None) -> float:
    """P(R_alpha > x) = p_1(x) / p_1(0), clamped to [0, 1]."""
    idx = as_index(alpha)
    if x < 0:
        raise DomainError("x must be nonnegative")
    ratio = (transition_density(idx, 1.0, x, spec)
             / transition_density(idx, 1.0, 0.0, spec))
    return min(1.0, max(0.0, ratio))
