"""Independent classical-statics oracle and the invariant test suite.

The oracle side of every check here is deliberately elementary: given a
force P and a moment M0 about the origin at some cut, moment
equilibrium of an unloaded bar gives the internal moment at any other
cut position x as M0 - x cross P.  Nothing in this module uses wedge
products, shoelace sums or hybrid loops (only Vec3 arithmetic), so
agreement with the resultants module is a meaningful check rather than
a shared-bug tautology.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bivector import Vec3
from .frame import CutPoint, DualLoop, StructuralLoop, position_at
from .legendre import SampledField
from .resultants import force, internal_moment, total_moment

__all__ = [
    "ClassicalState",
    "CheckResult",
    "SuiteReport",
    "classical_internal_moment",
    "finite_difference_gradient",
    "run_suite",
]

EQ_TOL = 1e-9
ORTHO_TOL = 1e-9


@dataclass(frozen=True)
class ClassicalState:
    """Force and moment about the origin, known at some cut."""

    force: Vec3
    moment_about_origin: Vec3


def classical_internal_moment(state: ClassicalState, x: Vec3) -> Vec3:
    """Internal moment at x from elementary statics: M0 - x cross P."""
    px, py, pz = state.force.x, state.force.y, state.force.z
    lx = x.y * pz - x.z * py
    ly = x.z * px - x.x * pz
    lz = x.x * py - x.y * px
    m0 = state.moment_about_origin
    return Vec3(m0.x - lx, m0.y - ly, m0.z - lz)


def finite_difference_gradient(fld: SampledField, index: tuple[int, ...]) -> Vec3:
    """Central-difference gradient at one interior grid node.

    Scalar stencil, independent of the vectorized transform it is used
    to cross-check.  Boundary nodes are rejected.
    """
    shape = fld.values.shape
    if len(index) != fld.dim:
        raise ValueError(f"index must have {fld.dim} entries, got {len(index)}")
    for a, ia in enumerate(index):
        if not 1 <= ia <= shape[a] - 2:
            raise ValueError(f"index {index} is not interior to grid of shape {shape}")
    comps = []
    for a in range(fld.dim):
        up = list(index)
        dn = list(index)
        up[a] += 1
        dn[a] -= 1
        comps.append(
            (float(fld.values[tuple(up)]) - float(fld.values[tuple(dn)])) / (2.0 * fld.spacing[a])
        )
    comps += [0.0] * (3 - fld.dim)
    return Vec3(*comps)


@dataclass
class CheckResult:
    name: str
    max_residual: float
    tolerance: float
    passed: bool

    def render_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<28s} max_residual={self.max_residual:.3e} tol={self.tolerance:.1e} {status}"


@dataclass
class SuiteReport:
    seed: int
    samples: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render_text(self) -> str:
        lines = [f"verification suite: samples={self.samples} seed={self.seed}"]
        lines += [c.render_line() for c in self.checks]
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _sample_cuts(loop: StructuralLoop, samples: int, rng: random.Random) -> list[CutPoint]:
    cuts = []
    for _ in range(samples):
        seg = rng.randrange(len(loop.segments))
        lo, hi = loop.segments[seg].param_range
        cuts.append(CutPoint(seg, lo + rng.random() * (hi - lo)))
    return sorted(cuts, key=lambda c: (c.segment, c.param))


def run_suite(
    structure: StructuralLoop, dual: DualLoop, samples: int, seed: int = 0
) -> SuiteReport:
    """Sample cuts around the loop and check the moment identities.

    At each cut: the decomposition total == x cross P + internal, and
    agreement of the internal moment with the classical oracle.  For
    duals with four or fewer vertices the force/total-moment
    orthogonality theorem is checked as well.  Failures become report
    entries, never exceptions; a fixed seed makes the report
    reproducible.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    cuts = _sample_cuts(structure, samples, rng)

    p_vec = force(dual)
    m_total = total_moment(dual)
    state = ClassicalState(force=p_vec, moment_about_origin=m_total)

    worst_identity = 0.0
    worst_oracle = 0.0
    for cut in cuts:
        x = position_at(structure, cut)
        m_int = internal_moment(dual, x)
        lever = x.cross(p_vec)

        res = m_total - lever - m_int
        scale = 1.0 + max(abs(m_total.x), abs(m_total.y), abs(m_total.z))
        worst_identity = max(
            worst_identity, max(abs(res.x), abs(res.y), abs(res.z)) / scale
        )

        m_cl = classical_internal_moment(state, x)
        res = m_int - m_cl
        scale = 1.0 + max(abs(m_int.x), abs(m_int.y), abs(m_int.z))
        worst_oracle = max(worst_oracle, max(abs(res.x), abs(res.y), abs(res.z)) / scale)

    report = SuiteReport(seed=seed, samples=samples)
    report.checks.append(
        CheckResult("moment_decomposition", worst_identity, EQ_TOL, worst_identity <= EQ_TOL)
    )
    report.checks.append(
        CheckResult("classical_oracle", worst_oracle, EQ_TOL, worst_oracle <= EQ_TOL)
    )
    if len(dual) <= 4:
        dot = abs(p_vec.dot(m_total))
        bound = ORTHO_TOL * p_vec.norm() * m_total.norm()
        report.checks.append(CheckResult("force_moment_orthogonality", dot, bound, dot <= bound))
    return report
