"""Exact computations with Schur, Hall-Littlewood and Macdonald families, their
vertex-operator realization, and the bicharacter construction of the
corresponding braided vertex algebras."""

from .bicharacter import (
    ModeWindow,
    SigmaBicharacter,
    VElement,
    braiding_R,
    field_apply,
    hopf_antipode,
    hopf_coproduct,
    r_convolve,
    r_eval,
    r_inverse,
    r_transpose,
    sigma_build,
)
from .kring import KElement
from .orthopoly import build_family, family
from .partitions import make_partition, partitions_of
from .report import CheckReport
from .scalars import ParamPoly, ParamSeries, RatFunc
from .symfunc import HALL_LITTLEWOOD, MACDONALD, PRESETS, SCHUR, SymFunc, VFamily, preset
from .vertexop import LatticeState, phi_mode, phi_product, psi_mode

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "HALL_LITTLEWOOD",
    "KElement",
    "LatticeState",
    "MACDONALD",
    "ModeWindow",
    "PRESETS",
    "ParamPoly",
    "ParamSeries",
    "RatFunc",
    "SCHUR",
    "SigmaBicharacter",
    "SymFunc",
    "VElement",
    "VFamily",
    "braiding_R",
    "build_family",
    "family",
    "field_apply",
    "hopf_antipode",
    "hopf_coproduct",
    "make_partition",
    "partitions_of",
    "phi_mode",
    "phi_product",
    "preset",
    "psi_mode",
    "r_convolve",
    "r_eval",
    "r_inverse",
    "r_transpose",
    "sigma_build",
]
