"""Pencils of hypersurfaces over finite fields whose F_q-members are all
nonblocking, with exhaustive verification and checkable certificates."""

__version__ = "0.1.0"

from .gf import FieldElement, FiniteField, make_field, parse_field_spec  # noqa: E402
from .projgeom import ProjLine, ProjPoint  # noqa: E402
from .forms import HomogeneousForm, Pencil, pencil_member  # noqa: E402
from .blocking import BlockingVerdict, PointSet, classify, is_blocking, rational_points, skew_lines  # noqa: E402
from .constructions import (build, fermat_pencil, highdim_pencil, lemma_hypersurface,  # noqa: E402
                            near_miss_pencil, plane_pencil)

__all__ = [
    "FieldElement", "FiniteField", "make_field", "parse_field_spec",
    "ProjLine", "ProjPoint", "HomogeneousForm", "Pencil", "pencil_member",
    "BlockingVerdict", "PointSet", "classify", "is_blocking", "rational_points", "skew_lines",
    "build", "fermat_pencil", "highdim_pencil", "lemma_hypersurface", "near_miss_pencil",
    "plane_pencil",
]
