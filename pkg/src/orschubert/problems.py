"""Packaged enumerative problems with known closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, Union

from .chmod2 import Ch2Class
from .cw import CWClass, GWForm, cwdegree, cwmult, lift_schubert, schubert_problem
from .errors import InternalError, ResourceError
from .schur import degree
from .wring import wdegree
from .young import Frame

#: Largest Grassmannian dimension p1_power will attempt by default.
DEFAULT_MAX_DIM = 80


@dataclass(frozen=True)
class ProblemReport:
    frame: Frame
    inputs: str
    gw: Union[GWForm, int]
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return self.gw.rank if isinstance(self.gw, GWForm) else self.gw

    @property
    def signature_proxy(self):
        """pos - neg for a form; undefined (None) for a plain integer degree."""
        return self.gw.signature if isinstance(self.gw, GWForm) else None


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def balanced_closed_form(i: int, j: int) -> GWForm:
    total, signed = comb(2 * j, 2 * i), comb(j, i)
    return GWForm((total + signed) // 2, (total - signed) // 2)


def balanced(i: int, j: int) -> GWForm:
    """Four general 2i x (2j-2i) rectangle conditions in Gr(4i, 4j)."""
    if not 0 < i < j:
        raise ValueError(f"balanced(i, j) needs 0 < i < j, got ({i}, {j})")
    f = Frame(4 * i, 4 * j - 4 * i)
    rect = (2 * j - 2 * i,) * (2 * i)
    gw = schubert_problem([(rect, 0)] * 4, f)
    expected = balanced_closed_form(i, j)
    if gw != expected:
        raise InternalError(f"balanced({i}, {j}) computed {gw}, closed form gives {expected}")
    return gw


def _power(x: CWClass, e: int) -> CWClass:
    out = CWClass.unit(x.frame)
    for _ in range(e):
        out = cwmult(out, x)
    return out


def p1_power_report(n: int, max_dim: int = DEFAULT_MAX_DIM) -> ProblemReport:
    if n < 2:
        raise ValueError(f"p1_power needs n >= 2, got {n}")
    f = Frame(4, 2 * n)
    if f.dim > max_dim:
        raise ResourceError(f"Gr(4,{2 * n + 4}) has dimension {f.dim} > limit {max_dim}")
    top = _power(lift_schubert((2, 2), f, 0), 2 * n)
    d = degree(top.chow)
    c = wdegree(top.ipart.free, top.twist)
    if c != catalan(n):
        raise InternalError(f"W-degree {c} differs from the Catalan number {catalan(n)}")
    gw = cwdegree(top)
    if gw != GWForm((d + c) // 2, (d - c) // 2):
        raise InternalError(f"inconsistent degree {gw} for D={d}, C={c}")
    return ProblemReport(f, f"p1^{2 * n} in Gr(4,{2 * n + 4})", gw,
                         {"D": d, "C": c})


def p1_power(n: int, max_dim: int = DEFAULT_MAX_DIM) -> GWForm:
    """The refined degree of the 2n-th power of the first Pontryagin class in Gr(4, 2n+4)."""
    return p1_power_report(n, max_dim).gw


def balanced_report(i: int, j: int) -> ProblemReport:
    gw = balanced(i, j)
    return ProblemReport(Frame(4 * i, 4 * j - 4 * i),
                         f"4 x ({2 * j - 2 * i}^{2 * i}) in Gr({4 * i},{4 * j})", gw,
                         {"closed_form": str(balanced_closed_form(i, j))})


def plucker(n: int) -> ProblemReport:
    """Refined degree of Gr(2, n+1) in its Pluecker embedding.

    The hyperplane class only lifts with the det twist, as a torsion class, so the
    answer is hyperbolic when it is a form at all.  The mod-2 top power is the
    parity of the Catalan number C_{n-1}.
    """
    if n < 2:
        raise ValueError(f"plucker needs n >= 2, got {n}")
    f = Frame(2, n - 1)
    top = _power(lift_schubert((1,), f, 1), 2 * n - 2)
    gw = cwdegree(top)
    mod2 = Ch2Class._raw(f, (p for p, c in top.chow.terms.items() if c % 2))
    return ProblemReport(f, f"sigma_1^{2 * n - 2} in Gr(2,{n + 1}), det twist", gw, {
        "catalan": catalan(n - 1),
        "mod2_top_nonzero": bool(mod2),
        "torsion": not top.ipart.free,
    })
