"""Exact computation in the braid group B3 = <a, b | aba = bab>.

Words are plain strings over ``a, A, b, B`` (capitals are inverses).
"""

from .cayley import CfState, ball, export_dot, fold, step
from .fingerprint import bfs_ball, distance, equal_elements, fingerprint
from .geodesics import check, is_geodesic, translation_length
from .normal_forms import (
    RgForm,
    SlWord,
    TfWord,
    element_length,
    equal,
    phi1,
    phi2,
    psi1,
    psi2,
    shortlex,
    to_cf,
    to_rg,
)
from .words import free_reduce, parse, swap, syllables

__version__ = "0.1.0"
