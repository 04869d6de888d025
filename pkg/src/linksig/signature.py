"""Multivariable link signatures from generalized Seifert matrices.

The generic engine takes the 2^mu integer matrices A^eps of a C-complex
(keyed by sign vectors eps in {+,-}^mu, with A^{-eps} the transpose of
A^eps), assembles the Hermitian matrix

    H(omega) = prod_i (1 - conj(omega_i)) * sum_eps eps_1..eps_mu
               * omega_1^{(1-eps_1)/2} .. omega_mu^{(1-eps_mu)/2} * A^eps,

and reports its inertia.  The signature of H is the multivariable
(Cimasoni-Florens) signature of the colored link at omega.

For the (2,2l)-torus family everything is also available in closed form:
the leading principal minors of H satisfy a three-term recurrence solved
by Chebyshev polynomials of the second kind, which yields a piecewise
constant signature formula in alpha1 + alpha2 (Sylvester's criterion).
Both routes are kept and cross-checked by the test suite.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping

import numpy as np

from .chebyshev import eval_U
from .errors import (
    BadSystemError,
    NotDefinedError,
    NullityWarning,
    OmegaOneError,
)
from .torus_rep import AnglePair, check_ell, is_defined

EIG_ZERO_SCALE = 1e-9


def _eps_keys(mu: int) -> list[str]:
    return ["".join(chars) for chars in product("+-", repeat=mu)]


def _neg_key(key: str) -> str:
    return "".join("-" if ch == "+" else "+" for ch in key)


@dataclass(frozen=True, eq=False)
class SeifertSystem:
    """The 2^mu integer Seifert matrices of a C-complex, keyed by sign vector."""

    mu: int
    rank: int
    matrices: dict[str, np.ndarray]


def seifert_system(mu: int, matrices: Mapping) -> SeifertSystem:
    """Validate and freeze a Seifert system; raises BadSystemError on violation."""
    if not isinstance(mu, int) or mu < 1:
        raise BadSystemError("mu must be a positive integer")
    keys = _eps_keys(mu)
    missing = [k for k in keys if k not in matrices]
    if missing:
        raise BadSystemError(f"missing sign-vector keys: {missing}")
    extra = [k for k in matrices if k not in keys]
    if extra:
        raise BadSystemError(f"unexpected keys: {extra}")
    mats = {}
    rank = None
    for k in keys:
        try:
            m = np.asarray(matrices[k])
            if m.size and not np.issubdtype(m.dtype, np.integer):
                if not np.all(m == np.round(m)):
                    raise BadSystemError(f"matrix {k} has non-integer entries")
            m = m.astype(np.int64)
        except BadSystemError:
            raise
        except (TypeError, ValueError) as exc:
            raise BadSystemError(f"matrix {k} is not numeric: {exc}") from exc
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            if m.size == 0:
                m = m.reshape(0, 0)
            else:
                raise BadSystemError(f"matrix {k} is not square")
        if rank is None:
            rank = m.shape[0]
        elif m.shape[0] != rank:
            raise BadSystemError(f"matrix {k} has rank {m.shape[0]}, expected {rank}")
        mats[k] = m
    for k in keys:
        nk = _neg_key(k)
        if not np.array_equal(mats[nk], mats[k].T):
            raise BadSystemError(
                f"transpose invariant violated for sign pair ({k}, {nk})"
            )
    return SeifertSystem(mu, rank, mats)


def seifert_to_json(s: SeifertSystem) -> dict:
    return {
        "mu": s.mu,
        "rank": s.rank,
        "matrices": {k: s.matrices[k].tolist() for k in _eps_keys(s.mu)},
    }


def seifert_from_json(data) -> SeifertSystem:
    """Load a Seifert system from a JSON string or an already-parsed dict."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise BadSystemError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise BadSystemError("top-level JSON value must be an object")
    for field in ("mu", "rank", "matrices"):
        if field not in data:
            raise BadSystemError(f"missing field {field!r}")
    system = seifert_system(data["mu"], data["matrices"])
    if system.rank != data["rank"]:
        raise BadSystemError(
            f"declared rank {data['rank']} != actual rank {system.rank}"
        )
    return system


def build_H(s: SeifertSystem, omegas: list[complex]) -> np.ndarray:
    """The Hermitian matrix H(omega) of the system at unit omega, all != 1."""
    if len(omegas) != s.mu:
        raise ValueError(f"expected {s.mu} omega values, got {len(omegas)}")
    for w in omegas:
        if abs(w - 1.0) < 1e-12:
            raise OmegaOneError("omega_i = 1 is outside the domain of the signature")
        if abs(abs(w) - 1.0) > 1e-9:
            raise ValueError(f"omega value {w} is not on the unit circle")
    acc = np.zeros((s.rank, s.rank), dtype=complex)
    for key, mat in s.matrices.items():
        coeff = 1.0 + 0.0j
        for ch, w in zip(key, omegas):
            if ch == "-":
                coeff *= -w
        acc += coeff * mat
    scale = 1.0 + 0.0j
    for w in omegas:
        scale *= 1.0 - w.conjugate()
    h = scale * acc
    return h


@dataclass(frozen=True)
class Inertia:
    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_pos - self.n_neg

    @property
    def rank(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero


def inertia(h: np.ndarray) -> Inertia:
    """Eigenvalue counts of a Hermitian matrix; zero threshold scales with size."""
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    if n == 0:
        return Inertia(0, 0, 0)
    if np.max(np.abs(h - h.conj().T)) > 1e-12 * max(1.0, np.max(np.abs(h))):
        raise ValueError("matrix is not Hermitian")
    eigs = np.linalg.eigvalsh(h)
    tau = EIG_ZERO_SCALE * np.max(np.abs(h)) * n
    n_pos = int(np.sum(eigs > tau))
    n_neg = int(np.sum(eigs < -tau))
    return Inertia(n_pos, n_neg, n - n_pos - n_neg)


def torus_seifert(ell: int) -> SeifertSystem:
    """Seifert system of the (2,2l)-torus link from its standard C-complex.

    For ell > 0 the rank is ell-1 with A^{++} upper bidiagonal: -1 on the
    diagonal, +1 on the superdiagonal, A^{--} its transpose and the mixed
    matrices zero.  The mirror (ell < 0) flips every sign, which reproduces
    the determinant recurrence shifted by pi.
    """
    check_ell(ell)
    rank = abs(ell) - 1
    app = -np.eye(rank, dtype=np.int64) + np.eye(rank, k=1, dtype=np.int64)
    if ell < 0:
        app = -app
    zero = np.zeros((rank, rank), dtype=np.int64)
    return seifert_system(
        2, {"++": app, "+-": zero, "-+": zero, "--": app.T}
    )


def delta_recursive(ell: int, alpha: AnglePair, m: int) -> float:
    """m-th leading principal minor of H for the (2,2l)-torus system, ell > 0.

    delta_1 = 1, delta_2 = 8 sin(a1) sin(a2) cos(a1+a2), and
    delta_{m+1} = 8 sin(a1) sin(a2) cos(a1+a2) delta_m
                  - 16 sin^2(a1) sin^2(a2) delta_{m-1}.
    """
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    if not 1 <= m <= ell:
        raise ValueError(f"m must lie in [1, {ell}]")
    a1, a2 = alpha.radians
    s = math.sin(a1) * math.sin(a2)
    diag = 8.0 * s * math.cos(a1 + a2)
    prev, cur = 0.0, 1.0  # determinants of the (-1)x(-1) and empty minors
    for _ in range(m - 1):
        prev, cur = cur, diag * cur - 16.0 * s * s * prev
    return cur


def delta_closed(ell: int, alpha: AnglePair, m: int) -> float:
    """Closed form: delta_m = 4^{m-1} sin^{m-1}(a1) sin^{m-1}(a2) U_{m-1}(cos(a1+a2))."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    if not 1 <= m <= ell:
        raise ValueError(f"m must lie in [1, {ell}]")
    a1, a2 = alpha.radians
    s = math.sin(a1) * math.sin(a2)
    return (4.0 * s) ** (m - 1) * eval_U(m - 1, math.cos(a1 + a2))


def _u_sign(m: int, su: Fraction | float) -> int:
    """Sign of U_m(cos(pi*su)) for su in (0, 2), by exact angle arithmetic.

    sign(U_m(cos psi)) = sign(sin((m+1) psi) / sin(psi)); at su = 1 the
    value is (-1)^m (m+1), positive exactly when m is even.
    """
    if su == 1:
        return 1 if m % 2 == 0 else -1
    t = ((m + 1) * su) % 2
    if t == 0 or t == 1:
        return 0
    s = 1 if t < 1 else -1
    return s if su < 1 else -s


def _sigma_sylvester(big_l: int, su: Fraction | float) -> int:
    """Signature of the rank (big_l - 1) torus matrix via leading minors.

    sigma = sign(delta_2) + sum_{i=2}^{big_l-1} sign(delta_i delta_{i+1});
    the minor signs come from the exact sign table of U_m(cos(pi su)).
    """
    signs = [_u_sign(m, su) for m in range(1, big_l)]  # delta_2 .. delta_big_l
    if any(s == 0 for s in signs):
        raise NotDefinedError("a leading minor vanishes: alpha on root locus")
    return signs[0] + sum(signs[i - 1] * signs[i] for i in range(1, big_l - 1))


def sigma_torus_closed(ell: int, alpha: AnglePair) -> int:
    """Closed-form signature of the (2,2l)-torus link at omega from alpha.

    Strictly inside the strip i*pi/|ell| < alpha1+alpha2 < (i+1)*pi/|ell|
    the value is |ell|-2i-1 (i < |ell|) or -3|ell|+2i+1 (i >= |ell|); the
    admissible interior line alpha1+alpha2 = pi routes through the Sylvester
    minor-sign path instead.  Mirroring negates: sigma(-ell) = -sigma(ell).
    """
    check_ell(ell)
    if not is_defined(ell, alpha):
        raise NotDefinedError("alpha on Alexander root locus")
    big_l = abs(ell)
    sign_ell = 1 if ell > 0 else -1
    if big_l == 1:
        return 0
    su = alpha.sum_over_pi()
    if su == 1 or (isinstance(su, float) and abs(su - 1.0) < 1e-12):
        value = _sigma_sylvester(big_l, Fraction(1))
    else:
        i = math.floor(su * big_l)
        value = big_l - 2 * i - 1 if i < big_l else -3 * big_l + 2 * i + 1
    return sign_ell * value


def sigma_eval(s: SeifertSystem, omegas: list[complex]) -> int:
    """Signature of H(omega) by the Hermitian eigenvalue engine.

    Emits NullityWarning when near-zero eigenvalues are present, which
    signals omega on (or numerically near) the Alexander root locus.
    """
    ine = inertia(build_H(s, omegas))
    if ine.n_zero > 0:
        warnings.warn(
            NullityWarning(
                f"H(omega) has {ine.n_zero} near-zero eigenvalue(s); "
                "omega is on or near the root locus"
            )
        )
    return ine.signature


def symmetrized_sigma(link, alpha: AnglePair) -> Fraction:
    """-1/2 (sigma(omega1, omega2) + sigma(omega1, omega2^{-1})).

    `link` is either an integer linking number (torus closed form) or a
    SeifertSystem (generic engine).  Always a half-integer; an integer on
    the torus family.
    """
    if isinstance(link, SeifertSystem):
        w1, w2 = alpha.omega()
        s1 = sigma_eval(link, [w1, w2])
        s2 = sigma_eval(link, [w1, w2.conjugate()])
    else:
        s1 = sigma_torus_closed(link, alpha)
        s2 = sigma_torus_closed(link, alpha.flip_alpha2())
    return Fraction(-(s1 + s2), 2)


def levine_tristram_via_cf(ell: int, omega: complex) -> int:
    """One-variable signature of the torus link at omega, via the diagonal.

    Uses sigma(omega) = sigma(omega, omega) - lk between the components.
    """
    check_ell(ell)
    if abs(omega - 1.0) < 1e-12:
        raise OmegaOneError("omega = 1 is outside the domain of the signature")
    phase = math.atan2(omega.imag, omega.real) % (2.0 * math.pi)
    alpha = AnglePair.from_radians(phase / 2.0, phase / 2.0)
    return sigma_torus_closed(ell, alpha) - ell
