"""The pillowcase and its intersection theory for 2-strand torus braids.

Away from phi in {0, pi} the quotient of pairs of trace-fixed SU(2)
2-tuples with equal products is a cylinder with coordinates
(phi, theta) in (0, pi) x [0, 2pi).  The diagonal curve sits at theta = 0;
the graph curve of sigma_1^(2*ell) is the set theta = theta(phi) computed
here by two independent routes:

  * quaternion route: conjugate P1 = cos(phi) i + sin(phi) j by
    (X1 X2)^ell and project onto the circle frame of the constraint plane;
  * closed form: cos(theta) = T_{2|ell|}(cos a1 cos a2 - cos(phi) sin a1 sin a2).

The signed count of the curve's crossings through theta = 0 is the
representation-count invariant; all crossings carry the sign of ell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import eval_T
from .errors import (
    DegeneratePhiError,
    FitFailureError,
    NotDefinedError,
    PositiveOnlyError,
    TransversalityFailureError,
)
from .su2 import I as QI
from .su2 import UnitQuaternion, act
from .torus_rep import AnglePair, check_ell, is_defined, solve_phi, torus_braid

TAU_TRANS = 1e-6
FD_STEP = 1e-5
DEFAULT_SAMPLES = 2048

QUAT_PATH = "quaternion-path"
CHEB_PATH = "chebyshev-path"


@dataclass(frozen=True)
class PillowPoint:
    """(phi, theta) coordinates; phi strictly interior, theta reduced mod 2pi."""

    phi: float
    theta: float

    def __post_init__(self):
        if not 0.0 < self.phi < math.pi:
            raise ValueError(f"phi = {self.phi} not in (0, pi)")
        object.__setattr__(self, "theta", self.theta % (2.0 * math.pi))


@dataclass(frozen=True)
class PlaneData:
    """The plane n . x = d cutting the target circle out of the 2-sphere."""

    normal: tuple[float, float, float]
    offset: float


@dataclass(frozen=True)
class CurveSample:
    points: tuple[PillowPoint, ...]
    provenance: str

    def __post_init__(self):
        if self.provenance not in (QUAT_PATH, CHEB_PATH):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        phis = [p.phi for p in self.points]
        if any(b <= a for a, b in zip(phis, phis[1:])):
            raise ValueError("phi must be strictly increasing along a curve")


@dataclass(frozen=True)
class SignedIntersection:
    point: PillowPoint
    m: int
    sign: int


def plane(alpha: AnglePair, phi: float) -> PlaneData:
    """Constraint plane for Q1 at a given phi.  Guarantees |d|/|n| < 1."""
    if not 0.0 < phi < math.pi:
        raise DegeneratePhiError(f"phi = {phi} is not interior to (0, pi)")
    a1, a2 = alpha.radians
    s1, c1 = math.sin(a1), math.cos(a1)
    s2, c2 = math.sin(a2), math.cos(a2)
    sp, cp = math.sin(phi), math.cos(phi)
    normal = (s1 * c2 * cp + c1 * s2, s1 * c2 * sp, -s1 * s2 * sp)
    offset = s1 * c2 + c1 * s2 * cp
    return PlaneData(normal, offset)


def q1_param(alpha: AnglePair, phi: float, theta: float) -> np.ndarray:
    """Point at angle theta from P1 on the circle where the plane cuts the sphere."""
    pl = plane(alpha, phi)
    n = np.array(pl.normal)
    d = pl.offset
    n2 = float(n @ n)
    center = (d / n2) * n
    p1 = np.array([math.cos(phi), math.sin(phi), 0.0])
    v1 = p1 - center
    v2 = np.cross(n / math.sqrt(n2), v1)
    return center + math.cos(theta) * v1 + math.sin(theta) * v2


def gamma_cos_theta_quaternion(ell: int, alpha: AnglePair, phi: float) -> float:
    """cos(theta) on the graph curve by explicit quaternion conjugation."""
    check_ell(ell)
    if not 0.0 < phi < math.pi:
        raise DegeneratePhiError(f"phi = {phi} is not interior to (0, pi)")
    a1, a2 = alpha.radians
    s1, c1 = math.sin(a1), math.cos(a1)
    s2, c2 = math.sin(a2), math.cos(a2)
    sp, cp = math.sin(phi), math.cos(phi)
    x1 = UnitQuaternion(c1, s1 * cp, s1 * sp, 0.0)
    x2 = UnitQuaternion(c2, s2, 0.0, 0.0)
    g = (x1 * x2) ** ell
    p1 = UnitQuaternion(0.0, cp, sp, 0.0)
    q1 = g * p1 * g.inverse()
    pl = plane(alpha, phi)
    nx, ny, nz = pl.normal
    d = pl.offset
    n2 = nx * nx + ny * ny + nz * nz
    num = (
        (n2 * cp - d * nx) * q1.b
        + (n2 * sp - d * ny) * q1.c
        + (-d * nz) * q1.d
    )
    return num / (s2 * s2 * sp * sp)


def gamma_theta_quaternion(ell: int, alpha: AnglePair, phi: float) -> float:
    """theta(phi) in [0, pi] on the graph curve, quaternion route.

    The cosine may exceed 1 by a few ulp exactly at the crossings, so it is
    clamped before arccos.
    """
    c = gamma_cos_theta_quaternion(ell, alpha, phi)
    return math.acos(max(-1.0, min(1.0, c)))


def gamma_cos_theta_chebyshev(ell: int, alpha: AnglePair, phi: float) -> float:
    """cos(theta) = T_{2|ell|}(cos a1 cos a2 - cos(phi) sin a1 sin a2).

    Even degree makes the curve identical for ell and -ell; the sign of ell
    enters only through orientations.  Extends continuously to phi in {0, pi}.
    """
    check_ell(ell)
    a1, a2 = alpha.radians
    x = math.cos(a1) * math.cos(a2) - math.cos(phi) * math.sin(a1) * math.sin(a2)
    return eval_T(2 * abs(ell), x)


def gamma_theta_chebyshev(ell: int, alpha: AnglePair, phi: float) -> float:
    c = gamma_cos_theta_chebyshev(ell, alpha, phi)
    return math.acos(max(-1.0, min(1.0, c)))


def sample_curve(
    ell: int,
    alpha: AnglePair,
    samples: int = DEFAULT_SAMPLES,
    path: str = CHEB_PATH,
) -> CurveSample:
    """Sample the graph curve at `samples` uniform interior phi values."""
    if samples < 1:
        raise ValueError("need at least one sample")
    fn = gamma_theta_quaternion if path == QUAT_PATH else gamma_theta_chebyshev
    if path not in (QUAT_PATH, CHEB_PATH):
        raise ValueError(f"unknown provenance {path!r}")
    points = []
    for k in range(samples):
        phi = math.pi * (k + 1) / (samples + 1)
        points.append(PillowPoint(phi, fn(ell, alpha, phi)))
    return CurveSample(tuple(points), path)


def curves_to_csv(curves: list[CurveSample], footer: str | None = None) -> str:
    """CSV with header phi,theta,provenance; curves interleaved by phi index."""
    lines = ["phi,theta,provenance"]
    lengths = {len(c.points) for c in curves}
    if len(lengths) > 1:
        raise ValueError("curves must have equal sample counts to interleave")
    count = lengths.pop() if lengths else 0
    for k in range(count):
        for c in curves:
            p = c.points[k]
            lines.append(f"{p.phi:.17g},{p.theta:.17g},{c.provenance}")
    if footer is not None:
        lines.append(f"# {footer}")
    return "\n".join(lines) + "\n"


def leading_coeff_check(ell: int, alpha: AnglePair) -> tuple[int, float]:
    """Fit cos(theta) as a polynomial in cos(phi) from quaternion-route samples.

    Interpolates on 2*ell+1 Chebyshev nodes, validates the fit on off-node
    points (FitFailureError above 1e-6), and returns the recovered degree
    and leading coefficient.  Expected: degree 2*ell with leading coefficient
    2^(2*ell-1) sin^(2*ell)(a1) sin^(2*ell)(a2).
    """
    check_ell(ell)
    if ell < 0:
        raise PositiveOnlyError("leading-coefficient statement is for ell > 0")
    deg = 2 * ell
    nodes = np.cos((2 * np.arange(deg + 1) + 1) * math.pi / (2 * (deg + 1)))
    values = np.array(
        [gamma_cos_theta_quaternion(ell, alpha, math.acos(x)) for x in nodes]
    )
    cheb = np.polynomial.chebyshev.chebfit(nodes, values, deg)
    coeffs = np.polynomial.chebyshev.cheb2poly(cheb)
    probe = np.cos((2 * np.arange(deg + 2) + 1) * math.pi / (2 * (deg + 2)))
    fitted = np.polynomial.polynomial.polyval(probe, coeffs)
    actual = np.array(
        [gamma_cos_theta_quaternion(ell, alpha, math.acos(x)) for x in probe]
    )
    residual = float(np.max(np.abs(fitted - actual)))
    if residual > 1e-6:
        raise FitFailureError(f"fit residual {residual:.3e} exceeds 1e-6")
    scale = float(np.max(np.abs(coeffs)))
    nonzero = np.nonzero(np.abs(coeffs) > 1e-7 * scale)[0]
    degree = int(nonzero[-1]) if nonzero.size else 0
    return degree, float(coeffs[degree])


def transversal_slope(ell: int, alpha: AnglePair, m: int, phi: float) -> float:
    """|d theta/d phi| at a crossing, in closed form.

    Differentiating the Chebyshev identity and cancelling the double root
    of 1 - T^2 against the simple root of U gives
    2|ell| sin(a1) sin(a2) sin(phi) / sin(pi m / |ell|).
    """
    a1, a2 = alpha.radians
    return (
        2.0
        * abs(ell)
        * math.sin(a1)
        * math.sin(a2)
        * math.sin(phi)
        / math.sin(math.pi * m / abs(ell))
    )


def intersections(ell: int, alpha: AnglePair) -> list[SignedIntersection]:
    """Signed crossings of the graph curve through theta = 0.

    Every crossing carries sign(ell).  At the reference point
    alpha = (pi/2, pi/2) with |ell| = 2 the sign is recomputed by the
    numeric tangent-frame method and asserted equal.
    """
    check_ell(ell)
    if not is_defined(ell, alpha):
        raise NotDefinedError("alpha on Alexander root locus")
    sols = solve_phi(ell, alpha)
    sign = 1 if ell > 0 else -1
    out = []
    for m, phi in sols:
        slope = transversal_slope(ell, alpha, m, phi)
        if slope < TAU_TRANS:
            raise TransversalityFailureError(
                f"|dtheta/dphi| = {slope:.3e} at m={m}: alpha too near the root locus"
            )
        out.append(SignedIntersection(PillowPoint(phi, 0.0), m, sign))
    a1, a2 = alpha.radians
    half_pi = math.pi / 2.0
    if abs(ell) == 2 and abs(a1 - half_pi) < 1e-12 and abs(a2 - half_pi) < 1e-12:
        assert frame_intersection_sign(ell) == sign
    return out


# ---------------------------------------------------------------------------
# Orientation bookkeeping at the reference point alpha = (pi/2, pi/2).
#
# The ambient orientation comes from the base-fiber rule applied to
# f(X1, X2, Y1, Y2) = X1 X2 Y2^{-1} Y1^{-1} at the crossing point
# (j, i, j, i).  The frame below consists of completion vectors w1..w3,
# the coordinate tangents u1 = dg/dphi, u2 = dg/dtheta of the pillowcase
# chart g(phi, theta) = (i e^{-k phi}, i, i e^{-k (phi - theta)}, i e^{k theta}),
# and the conjugation-orbit tangents v1..v3.  Its determinant against the
# standard tangent basis is -8, which makes {u2, u1} a positive basis of
# the pillowcase at the crossing.
# ---------------------------------------------------------------------------


def _qmul_raw(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return np.array(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ]
    )


_RI = np.array([0.0, 1.0, 0.0, 0.0])
_RJ = np.array([0.0, 0.0, 1.0, 0.0])
_RK = np.array([0.0, 0.0, 0.0, 1.0])
_R0 = np.zeros(4)


def _flat(quads) -> np.ndarray:
    return np.concatenate([np.asarray(q, dtype=float) for q in quads])


def _fd_tangent(path, t0: float, step: float = FD_STEP) -> np.ndarray:
    plus = path(t0 + step)
    minus = path(t0 - step)
    return (_flat(plus) - _flat(minus)) / (2.0 * step)


def _quat_raw(q: UnitQuaternion) -> np.ndarray:
    return np.array([q.a, q.b, q.c, q.d])


def _i_exp_mk(t: float) -> UnitQuaternion:
    # i e^{-k t} = cos(t) i + sin(t) j
    return UnitQuaternion(0.0, math.cos(t), math.sin(t), 0.0)


def _i_exp_pk(t: float) -> UnitQuaternion:
    # i e^{k t} = cos(t) i - sin(t) j
    return UnitQuaternion(0.0, math.cos(t), -math.sin(t), 0.0)


def _reference_frame() -> dict[str, np.ndarray]:
    point = (_RJ, _RI, _RJ, _RI)

    def commutator_frame(e):
        return [_qmul_raw(e, q) - _qmul_raw(q, e) for q in point]

    def chart(phi, theta):
        return (
            _quat_raw(_i_exp_mk(phi)),
            _RI,
            _quat_raw(_i_exp_mk(phi - theta)),
            _quat_raw(_i_exp_pk(theta)),
        )

    half_pi = math.pi / 2.0
    u1 = _fd_tangent(lambda t: chart(t, 0.0), half_pi)
    u2 = _fd_tangent(lambda t: chart(half_pi, t), 0.0)
    v1 = _flat(commutator_frame(_RI))
    v2 = _flat(commutator_frame(_RJ))
    v3 = _flat(commutator_frame(_RK))
    w1 = _flat([_RK, _R0, _R0, _R0])
    w2 = _flat([_R0, _RK, _R0, _R0])
    w3 = _flat([_R0, _RJ, _R0, _R0])
    return {"u1": u1, "u2": u2, "v1": v1, "v2": v2, "v3": v3, "w1": w1, "w2": w2, "w3": w3}


def orientation_basis_determinant() -> float:
    """Determinant of the frame {w1,w2,w3,u1,u2,v1,v2,v3} against the standard
    tangent basis at (j, i, j, i); the reference value is -8."""
    fr = _reference_frame()
    std = [
        _flat([_RI, _R0, _R0, _R0]),
        _flat([_RK, _R0, _R0, _R0]),
        _flat([_R0, _RJ, _R0, _R0]),
        _flat([_R0, -_RK, _R0, _R0]),
        _flat([_R0, _R0, _RI, _R0]),
        _flat([_R0, _R0, _RK, _R0]),
        _flat([_R0, _R0, _R0, _RJ]),
        _flat([_R0, _R0, _R0, -_RK]),
    ]
    basis = [fr[name] for name in ("w1", "w2", "w3", "u1", "u2", "v1", "v2", "v3")]
    matrix = np.array([[e @ b for b in basis] for e in std])
    return float(np.linalg.det(matrix))


def frame_intersection_sign(ell: int) -> int:
    """Crossing sign at alpha = (pi/2, pi/2) by the numeric tangent-frame method.

    Only |ell| = 2 has its crossing at the reference point (phi, theta) =
    (pi/2, 0) where the frame is anchored.  Tangents to the diagonal and the
    graph curve are finite differences of the actual braid action; their
    coordinates in the positive basis {u2, u1} give the sign as a 2x2
    determinant.
    """
    check_ell(ell)
    if abs(ell) != 2:
        raise ValueError("the reference-frame computation is anchored at |ell| = 2")
    fr = _reference_frame()
    word = torus_braid(ell)
    half_pi = math.pi / 2.0

    def diag_path(phi):
        x1 = _i_exp_mk(phi)
        return (_quat_raw(x1), _RI, _quat_raw(x1), _RI)

    def graph_path(phi):
        x1 = _i_exp_mk(phi)
        y1, y2 = act(word, (x1, QI))
        return (_quat_raw(x1), _RI, _quat_raw(y1), _quat_raw(y2))

    psi1 = _fd_tangent(diag_path, half_pi)
    psi2 = _fd_tangent(graph_path, half_pi)
    span = np.column_stack(
        [fr["u2"], fr["u1"], fr["v1"], fr["v2"], fr["v3"]]
    )
    c1, *_ = np.linalg.lstsq(span, psi1, rcond=None)
    c2, *_ = np.linalg.lstsq(span, psi2, rcond=None)
    for coords, vec in ((c1, psi1), (c2, psi2)):
        residual = float(np.linalg.norm(span @ coords - vec))
        if residual > 1e-6:
            raise TransversalityFailureError(
                f"tangent does not lie in the frame span (residual {residual:.3e})"
            )
    det = c1[0] * c2[1] - c1[1] * c2[0]
    if abs(det) < 1e-8:
        raise TransversalityFailureError("degenerate tangent pair")
    return 1 if det > 0 else -1
