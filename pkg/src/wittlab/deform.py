"""Cocycle deformations of finite groups along normal abelian subgroups.

Given a normal abelian subgroup A of G with quotient Q = G/A and a
2-cocycle b of Q valued in A (for the conjugation action), the deformed
group G_b has the same carrier set and the multiplication

    g *_b h = b(gbar, hbar) * g * h.

The 2-cocycle identity is exactly associativity of the new product, and the
group axioms of the result are re-verified rather than assumed.  The module
also constructs the classical order-64 pair: the smallest non-isomorphic
groups whose representation categories are equivalent as monoidal
categories, obtained by deforming (Z2 x Z2) acting on (Z4 x Z4).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    FiniteGroup,
    GroupError,
    SubgroupSet,
    _subgroup_flags,
    abelian_group,
    make_group,
    semidirect_product,
)


@dataclass(frozen=True)
class CocycleData:
    """A 2-cocycle of Q = G/A valued in the normal abelian subgroup A.

    ``coset_of`` maps each element of G to its Q index; ``section`` picks the
    minimal-index representative per coset, with section[0] the identity.
    ``action[q]`` is the automorphism of A given by conjugation with
    section[q], stored as a map on the ambient element indices of A, and
    ``table[p][q]`` is the value b(p, q) as an ambient element of A.
    """

    group: FiniteGroup
    quotient: FiniteGroup
    subgroup: SubgroupSet
    coset_of: tuple[int, ...]
    section: tuple[int, ...]
    action: tuple[dict[int, int], ...]
    table: tuple[tuple[int, ...], ...]


def quotient_data(G: FiniteGroup, elements) -> tuple[FiniteGroup, tuple[int, ...], tuple[int, ...]]:
    """Quotient group G/A for a normal subgroup A given as an element set.

    Returns (Q, coset_of, section).  Coset 0 is A itself; the remaining
    cosets are ordered by minimal element index, which both makes the output
    deterministic and turns the canonical section of a semidirect product
    back into its complement.
    """
    elems = sorted(set(elements))
    eset = set(elems)
    if 0 not in eset:
        raise GroupError("subgroup must contain the identity")
    for g in range(G.order):
        for x in elems:
            if G.conj(g, x) not in eset:
                raise GroupError("subgroup is not normal")
    coset_of = [-1] * G.order
    section: list[int] = []
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        idx = len(section)
        for h in elems:
            coset_of[G.cayley[x][h]] = idx
        section.append(x)
    nq = len(section)
    rows = [[coset_of[G.cayley[section[p]][section[q]]] for q in range(nq)] for p in range(nq)]
    Q = make_group(rows, name=f"{G.name or 'G'}/A")
    return Q, tuple(coset_of), tuple(section)


def cocycle_from_table(G: FiniteGroup, A: SubgroupSet, table) -> CocycleData:
    """Package a Q x Q -> A value table as CocycleData over G and A."""
    Q, coset_of, section = quotient_data(G, A.elements)
    nq = Q.order
    table = tuple(tuple(int(v) for v in row) for row in table)
    if len(table) != nq or any(len(row) != nq for row in table):
        raise GroupError("cocycle table has the wrong shape")
    aset = set(A.elements)
    if any(v not in aset for row in table for v in row):
        raise GroupError("cocycle values must lie in the subgroup")
    action = tuple(
        {x: G.conj(section[q], x) for x in A.elements} for q in range(nq)
    )
    return CocycleData(
        group=G,
        quotient=Q,
        subgroup=A,
        coset_of=coset_of,
        section=tuple(section),
        action=action,
        table=table,
    )


def verify_cocycle(c: CocycleData) -> tuple[bool, tuple[int, int, int] | None]:
    """Check normalisation and the 2-cocycle identity.

    Returns (True, None) or (False, first violating triple (p, q, r)); the
    identity checked is  p(b(q,r)) * b(p, qr) == b(pq, r) * b(p, q)  with p
    acting through conjugation by its section representative.  Values of b
    are ambient element indices of the subgroup, so products are ambient
    Cayley lookups.
    """
    Q = c.quotient
    nq = Q.order
    b = c.table
    mul = c.group.cayley
    for q in range(nq):
        if b[0][q] != 0 or b[q][0] != 0:
            return False, (0, q, 0)
    for p in range(nq):
        for q in range(nq):
            for r in range(nq):
                lhs = mul[c.action[p][b[q][r]]][b[p][Q.cayley[q][r]]]
                rhs = mul[b[Q.cayley[p][q]][r]][b[p][q]]
                if lhs != rhs:
                    return False, (p, q, r)
    return True, None


def deform_by_cocycle(G: FiniteGroup, A: SubgroupSet, c: CocycleData) -> FiniteGroup:
    """The deformed group G_b on the same carrier set.

    Preconditions: A is normal abelian, the cocycle data was built over G/A,
    and the table passes verify_cocycle.  The result is validated against
    all the group axioms, so inconsistent data cannot slip through.
    """
    if not A.normal or not A.abelian:
        raise GroupError("deformation needs a normal abelian subgroup")
    Q, coset_of, section = quotient_data(G, A.elements)
    if Q.cayley != c.quotient.cayley or coset_of != c.coset_of:
        raise GroupError("cocycle data does not match G/A")
    ok, witness = verify_cocycle(c)
    if not ok:
        raise GroupError(f"cocycle identity fails at triple {witness}")
    n = G.order
    rows = [[0] * n for _ in range(n)]
    for g in range(n):
        cg = coset_of[g]
        row = rows[g]
        grow = G.cayley[g]
        for h in range(n):
            row[h] = G.cayley[c.table[cg][coset_of[h]]][grow[h]]
    name = f"{G.name}_b" if G.name else "G_b"
    return make_group(rows, name=name)


def trivial_cocycle(G: FiniteGroup, A: SubgroupSet) -> CocycleData:
    Q, _, _ = quotient_data(G, A.elements)
    table = [[0] * Q.order for _ in range(Q.order)]
    return cocycle_from_table(G, A, table)


def izumi_kosaki() -> tuple[FiniteGroup, CocycleData, FiniteGroup]:
    """The order-64 pair: G = (Z2 x Z2) |x (Z4 x Z4) and its deformation.

    The Klein group Q with generators q1, q2 acts on A = <a1> x <a2> by
    q_i(a_i) = a_i and q_i(a_{i+1}) = a_i^2 a_{i+1} (indices mod 2).  The
    deforming cocycle takes the central values

        b(q1^t1 q2^t2, q1^r1 q2^r2) = a1^(2 t1 r1) a2^(2 t2 r2),

    the unique bilinear family compatible with this action: a direct
    computation shows every bilinear 2-cocycle for it is valued in the
    2-torsion <a1^2, a2^2>.  The two groups share every character-theoretic
    invariant computed in this package yet are not isomorphic.
    """
    A = abelian_group([4, 4], name="z4xz4")
    # abelian_group([4,4]) indexes a1^i a2^j as 4*i + j
    def el(i: int, j: int) -> int:
        return 4 * (i % 4) + (j % 4)

    # q1: a1 -> a1, a2 -> a1^2 a2 ; q2: a2 -> a2, a1 -> a2^2 a1
    q1 = [0] * 16
    q2 = [0] * 16
    for i in range(4):
        for j in range(4):
            q1[el(i, j)] = el(i + 2 * j, j)
            q2[el(i, j)] = el(i, j + 2 * i)
    ident = tuple(range(16))
    q12 = tuple(q1[q2[x]] for x in range(16))
    Q = abelian_group([2, 2], name="klein")
    # abelian_group([2,2]) indexes q1^t1 q2^t2 as 2*t1 + t2
    action = [ident, tuple(q2), tuple(q1), q12]
    G = semidirect_product(A, Q, action, name="g64")
    subgroup = _subgroup_flags(G, tuple(range(16)))
    # cocycle over Q = G/A: coset q = (t1, t2) -> b value a1^(2 t1 r1) a2^(2 t2 r2)
    table = [[0] * 4 for _ in range(4)]
    for t1 in range(2):
        for t2 in range(2):
            for r1 in range(2):
                for r2 in range(2):
                    table[2 * t1 + t2][2 * r1 + r2] = el(2 * t1 * r1, 2 * t2 * r2)
    c = cocycle_from_table(G, subgroup, table)
    Gb = deform_by_cocycle(G, subgroup, c)
    return G, c, Gb
