"""
Exact combinatorics and representation theory of odd symplectic
grassmannians and flag manifolds.

Submodules:

- :mod:`oddsymp.combinatorics` signed permutations, admissible indices, Bruhat order
- :mod:`oddsymp.geometry` echelon cells, Poincare polynomials, incidence conditions
- :mod:`oddsymp.orbits` odd symplectic orbit stratification
- :mod:`oddsymp.reptheory` GL and Sp dimension formulas, branching, filtrations
- :mod:`oddsymp.tensors` brute-force Schur and trace-free tensor oracle
- :mod:`oddsymp.bott` Bott's theorem, plethysm, Koszul and Fano invariants
- :mod:`oddsymp.verify` the acceptance suite
"""

from .combinatorics import AdmissibleIndex, SignedPermutation, bruhat_leq, length
from .geometry import cell_dimension, poincare_polynomial
from .orbits import cell_orbit, flag_orbits, grassmannian_orbits
from .partitions import Partition
from .reptheory import dim_gl, dim_odd, dim_sp

__version__ = "0.1.0"

__all__ = [
    "AdmissibleIndex", "SignedPermutation", "bruhat_leq", "length",
    "cell_dimension", "poincare_polynomial", "cell_orbit", "flag_orbits",
    "grassmannian_orbits", "Partition", "dim_gl", "dim_odd", "dim_sp",
]
