"""wittlab: exact Witt rings, character tables and isocategoricity screening.

The package computes, entirely in exact integer arithmetic:

- concrete finite groups from presentations (Todd-Coxeter) or permutations,
- irreducible character tables by eigenspace splitting mod p with cyclotomic
  lifting, Frobenius-Schur indicators and fusion coefficients,
- Grothendieck rings and the two-torsion Witt ring of a symmetric fusion
  category, with based-ring isomorphism testing,
- cocycle deformations of groups along normal abelian subgroups, including
  the classical order-64 pair of non-isomorphic groups with equivalent
  representation categories,
- a screening pipeline that certifies pairs of groups as not isocategorical
  and small groups as categorically rigid.
"""

__version__ = "0.1.0"

from . import chartab, deform, groups, presentations, screen, witt  # noqa: E402,F401
