"""Exact Schubert calculus on Grassmannians with quadratic-form-valued degrees.

Chow ring, mod-2 Chow ring with twisted Steenrod squares, W- and I-cohomology,
and Chow-Witt classes whose top-degree intersection numbers are quadratic forms
a<1> + b<-1>.
"""

from .chmod2 import Ch2Class, reduce, sq2
from .cw import CWClass, GWForm, cwdegree, cwmult, lift_schubert, schubert_problem
from .errors import NotLiftableError, SchubertError
from .iring import IClass, bockstein, imult, rho
from .problems import balanced, p1_power, plucker
from .schur import ChowClass, degree, mult
from .wring import WClass, basis_class, wmult
from .young import Frame, parse_frame, parse_partition

__all__ = [
    "Ch2Class", "ChowClass", "CWClass", "Frame", "GWForm", "IClass", "NotLiftableError",
    "SchubertError", "WClass", "balanced", "basis_class", "bockstein", "cwdegree", "cwmult",
    "degree", "imult", "lift_schubert", "mult", "p1_power", "parse_frame", "parse_partition",
    "plucker", "reduce", "rho", "schubert_problem", "sq2", "wmult",
]
