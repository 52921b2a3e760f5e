"""Exact calculus for noncommutative geometry.

Every coefficient is a ``fractions.Fraction``.  Submodules:

    core        algebras (free, polynomial, structure-constant), Lie data
    cyclic      cyclic words, necklace bracket, Hamiltonian derivations
    forms       noncommutative forms, Karoubi operator, de Rham cohomology
    hochschild  Hochschild (co)homology and the Gerstenhaber calculus
    star        Moyal product, Weyl algebra, symmetrization
    rep         trace functions on representation spaces, polyvectors
    chernweil   Gelfand-Smirnov and Weil algebras, Chern forms
    ktheory     idempotent and invertible matrices, Chern characters
    parser      text syntax; ``cli`` is the ``ncalc`` command
"""

from ._backend import BACKEND
from .core import (FinDimAlgebra, FreeAlgebra, FreePoly, PolynomialAlgebra,
                   StructureAlgebra, structure_validate)
from .errors import CapExceeded, NcalcError, ValidationError, max_dim, set_max_dim
from .forms import NCForm, de_rham_d, dr_cohomology, dr_reduce, hochschild_b, karoubi
from .hochschild import Bimodule, hh_cohomology, hh_homology
from .parser import parse, to_str
from .suites import run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Bimodule", "CapExceeded", "FinDimAlgebra", "FreeAlgebra", "FreePoly",
    "NCForm", "NcalcError", "PolynomialAlgebra", "StructureAlgebra", "ValidationError",
    "de_rham_d", "dr_cohomology", "dr_reduce", "hh_cohomology", "hh_homology",
    "hochschild_b", "karoubi", "max_dim", "parse", "run_suite", "set_max_dim",
    "structure_validate", "suite_names", "to_str",
]
