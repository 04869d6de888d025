"""Grid verification harness for the signature identity and its congruences.

Sweeps run over the exact rational-angle lattice ((p/res) pi, (q/res) pi),
1 <= p, q < res, so membership in the Alexander root locus is an integer
test and excluded points are skipped exactly, never by tolerance.  Each
report is deterministic given (ell, resolution) and serializes to JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .signature import sigma_torus_closed
from .torus_rep import (
    AnglePair,
    RationalAngle,
    check_ell,
    conway_potential_torus,
    h_invariant,
    is_defined,
)

SENTINEL = -999


def _grid(resolution: int):
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    angles = [RationalAngle(k, resolution) for k in range(1, resolution)]
    for p, a1 in enumerate(angles, start=1):
        for q, a2 in enumerate(angles, start=1):
            yield p, q, AnglePair(a1, a2)


@dataclass
class SweepReport:
    """Outcome of one main-identity sweep at a fixed ell and resolution."""

    ell: int
    resolution: int
    checked: int = 0
    failed: int = 0
    skipped_on_roots: int = 0
    points: list[dict] | None = None

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        out = {
            "ell": self.ell,
            "resolution": self.resolution,
            "checked": self.checked,
            "failed": self.failed,
            "skipped_on_roots": self.skipped_on_roots,
        }
        if self.points is not None:
            out["points"] = self.points
        return out


def sweep_main_identity(
    ell: int, resolution: int, verbose: bool = False
) -> SweepReport:
    """Assert h = -(sigma(w1,w2) + sigma(w1,w2^{-1}))/2 over the exact grid."""
    check_ell(ell)
    report = SweepReport(ell, resolution, points=[] if verbose else None)
    for p, q, alpha in _grid(resolution):
        if not is_defined(ell, alpha):
            report.skipped_on_roots += 1
            continue
        h = h_invariant(ell, alpha)
        s1 = sigma_torus_closed(ell, alpha)
        s2 = sigma_torus_closed(ell, alpha.flip_alpha2())
        ok = 2 * h == -(s1 + s2)
        report.checked += 1
        if not ok:
            report.failed += 1
        if report.points is not None:
            report.points.append(
                {
                    "alpha": [f"{p}/{resolution}", f"{q}/{resolution}"],
                    "h": h,
                    "sigma": [s1, s2],
                    "pass": ok,
                }
            )
    return report


@dataclass
class RegionGrid:
    """h values over the lattice; SENTINEL marks excluded root-locus cells."""

    ell: int
    resolution: int
    values: list[list[int]] = field(default_factory=list)


def region_grid(ell: int, resolution: int) -> RegionGrid:
    check_ell(ell)
    grid = RegionGrid(ell, resolution)
    row: list[int] = []
    last_p = 0
    for p, q, alpha in _grid(resolution):
        if p != last_p:
            row = []
            grid.values.append(row)
            last_p = p
        if is_defined(ell, alpha):
            row.append(h_invariant(ell, alpha))
        else:
            row.append(SENTINEL)
    return grid


@dataclass
class Mod4Report:
    ell: int
    resolution: int
    checked: int = 0
    failed: int = 0
    skipped_on_roots: int = 0
    skipped_zero_potential: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "resolution": self.resolution,
            "checked": self.checked,
            "failed": self.failed,
            "skipped_on_roots": self.skipped_on_roots,
            "skipped_zero_potential": self.skipped_zero_potential,
        }


def _mod4_point_holds(sigma: int, ell: int, potential: float) -> bool | None:
    """None when the hypothesis (nonzero potential) fails, else the verdict."""
    if potential == 0.0:
        return None
    nabla_sign = 1 if potential > 0 else -1
    return (sigma - (2 + ell + nabla_sign)) % 4 == 0


def check_mod4_congruence(ell: int, resolution: int) -> Mod4Report:
    """sigma == 2 + ell + sign(conway potential) mod 4 wherever the potential
    is nonzero, over the exact admissible grid.  Requires ell > 0 (the
    potential normalization is pinned only there)."""
    if ell < 1:
        raise ValueError("mod-4 congruence check requires positive ell")
    report = Mod4Report(ell, resolution)
    for _, _, alpha in _grid(resolution):
        if not is_defined(ell, alpha):
            report.skipped_on_roots += 1
            continue
        verdict = _mod4_point_holds(
            sigma_torus_closed(ell, alpha), ell, conway_potential_torus(ell, alpha)
        )
        if verdict is None:
            report.skipped_zero_potential += 1
            continue
        report.checked += 1
        if not verdict:
            report.failed += 1
    return report


@dataclass
class JumpReport:
    checked: int = 0
    failed: int = 0
    skipped_zero_potential: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "failed": self.failed,
            "skipped_zero_potential": self.skipped_zero_potential,
            "failures": self.failures,
        }


def check_sigma_jump_dichotomy(
    omegas,
    sigma_before,
    sigma_after,
    potential_sign_before,
    potential_sign_after,
) -> JumpReport:
    """Crossing-change dichotomy: the signature difference after a negative
    crossing change is 0 where the two potentials agree in sign and -2 where
    they disagree.

    Caller supplies the two signature functions and the two potential-sign
    functions (for instance built from user Seifert JSON); each is called
    with one (omega1, omega2) pair.  Points where either potential sign is
    zero fall outside the hypothesis and are skipped.
    """
    report = JumpReport()
    for omega in omegas:
        sb = potential_sign_before(omega)
        sa = potential_sign_after(omega)
        if sb == 0 or sa == 0:
            report.skipped_zero_potential += 1
            continue
        diff = sigma_after(omega) - sigma_before(omega)
        expected = 0 if sb * sa > 0 else -2
        report.checked += 1
        if diff != expected:
            report.failed += 1
            report.failures.append(
                {
                    "omega": [repr(omega[0]), repr(omega[1])],
                    "difference": diff,
                    "expected": expected,
                }
            )
    return report
