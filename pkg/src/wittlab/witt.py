"""Fusion data, Grothendieck rings and two-torsion Witt rings.

For a symmetric fusion category the Witt ring has a Z_2 basis consisting of
the self-dual simples whose self-duality pairing is symmetric; products are
the fusion products reduced mod 2 and projected back onto that basis.  For
the representation category of a finite group the selection scalar of a
self-dual simple is its second Frobenius-Schur indicator, so everything is
computed from the character table.

Based rings (a distinguished basis, a unit and integer structure constants)
are compared by basis bijections that preserve the unit and all constants;
the search is exhaustive with iterated fingerprint refinement, which keeps
it instant at the basis sizes that occur here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import chartab
from .groups import AbelianStructure, DualGroup, FiniteGroup, characters_of_abelian

__all__ = [
    "RootOfUnity",
    "ONE",
    "MINUS_ONE",
    "FusionData",
    "BasedRing",
    "WittRing",
    "make_fusion_data",
    "make_based_ring",
    "assert_associative",
    "witt_basis",
    "witt_ring",
    "grothendieck_ring",
    "based_ring_isomorphism",
    "ring_fingerprint",
    "fusion_data_from_table",
    "rep_g_fusion_data",
    "rep_g_u_fusion_data",
    "double_abelian_witt",
    "vec_z2_fixture",
]


class FusionError(ValueError):
    """Structurally invalid fusion or based-ring data."""


# ------------------------------------------------------------- roots of unity


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_order ** num in lowest terms; order is 1, 2 or 4 here."""

    num: int
    order: int

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = math.lcm(self.order, other.order)
        return root_of_unity(self.num * (n // self.order) + other.num * (n // other.order), n)

    @property
    def is_one(self) -> bool:
        return self.order == 1

    def __str__(self) -> str:
        return {(0, 1): "1", (1, 2): "-1", (1, 4): "i", (3, 4): "-i"}.get(
            (self.num, self.order), f"z{self.order}^{self.num}"
        )


def root_of_unity(num: int, order: int) -> RootOfUnity:
    if order < 1:
        raise FusionError("root order must be positive")
    num %= order
    g = math.gcd(num, order)
    if num == 0:
        return RootOfUnity(0, 1)
    return RootOfUnity(num // g, order // g)


ONE = root_of_unity(0, 1)
MINUS_ONE = root_of_unity(1, 2)
IMAG = root_of_unity(1, 4)


def root_of_sign(v: int) -> RootOfUnity:
    if v == 1:
        return ONE
    if v == -1:
        return MINUS_ONE
    raise FusionError(f"{v} is not a sign")


# ----------------------------------------------------------------- fusion data


@dataclass(frozen=True)
class FusionData:
    """Simple-object labels, duality, self-duality scalars and fusion tensor.

    ``scalars[i]`` is the braided self-duality scalar of simple i; it is a
    free choice (set to 1) for non-self-dual simples, where nothing depends
    on it.  ``symmetric`` records whether the source braiding is symmetric.
    """

    labels: tuple[str, ...]
    unit: int
    dual: tuple[int, ...]
    scalars: tuple[RootOfUnity, ...]
    tensor: tuple[tuple[tuple[int, ...], ...], ...]
    symmetric: bool

    @property
    def rank(self) -> int:
        return len(self.labels)

    def weakly_symmetric(self, i: int) -> bool:
        return (self.scalars[i] * self.scalars[self.dual[i]]).is_one


def make_fusion_data(labels, unit, dual, scalars, tensor, symmetric) -> FusionData:
    labels = tuple(labels)
    r = len(labels)
    dual = tuple(dual)
    scalars = tuple(scalars)
    tensor = tuple(tuple(tuple(row) for row in plane) for plane in tensor)
    if dual[unit] != unit:
        raise FusionError("the unit must be self-dual")
    if any(dual[dual[i]] != i for i in range(r)):
        raise FusionError("duality is not an involution")
    for j in range(r):
        for k in range(r):
            if tensor[unit][j][k] != (1 if j == k else 0):
                raise FusionError("unit row violates the unit law")
            if tensor[j][k][unit] != (1 if k == dual[j] else 0):
                raise FusionError("fusion tensor does not respect duality")
    if symmetric:
        for i in range(r):
            if dual[i] == i and scalars[i].order > 2:
                raise FusionError("self-dual scalar must be +-1 for a symmetric braiding")
    return FusionData(
        labels=labels, unit=unit, dual=dual, scalars=scalars, tensor=tensor,
        symmetric=symmetric,
    )


# ----------------------------------------------------------------- based rings


@dataclass(frozen=True)
class BasedRing:
    """Ring with a distinguished basis; constants over Z or Z_2."""

    coeff: str  # "Z" or "Z2"
    labels: tuple[str, ...]
    unit: int
    constants: tuple[tuple[tuple[int, ...], ...], ...]
    commutative: bool

    @property
    def rank(self) -> int:
        return len(self.labels)


def make_based_ring(coeff, labels, unit, constants, commutative) -> BasedRing:
    if coeff not in ("Z", "Z2"):
        raise FusionError("coefficient tag must be Z or Z2")
    labels = tuple(labels)
    r = len(labels)
    constants = tuple(
        tuple(tuple(int(v) % 2 if coeff == "Z2" else int(v) for v in row) for row in plane)
        for plane in constants
    )
    if any(v < 0 for plane in constants for row in plane for v in row):
        raise FusionError("structure constants must be nonnegative")
    for j in range(r):
        for k in range(r):
            if constants[unit][j][k] != (1 if j == k else 0):
                raise FusionError("unit law fails")
            if constants[j][unit][k] != (1 if j == k else 0):
                raise FusionError("unit law fails on the right")
    if commutative:
        for i in range(r):
            for j in range(r):
                if constants[i][j] != constants[j][i]:
                    raise FusionError("commutative flag contradicts the constants")
    ring = BasedRing(
        coeff=coeff, labels=labels, unit=unit, constants=constants,
        commutative=commutative,
    )
    if r <= 12:
        assert_associative(ring)
    return ring


def assert_associative(ring: BasedRing, limit: int = 20) -> bool:
    """Full associativity check of the structure constants (rank <= limit).

    Uses support lists, so group-like tensors cost ~rank^3 instead of rank^5.
    Returns False when the rank exceeds the limit (check skipped).
    """
    r = ring.rank
    if r > limit:
        return False
    mod2 = ring.coeff == "Z2"
    c = ring.constants
    support = [
        [[(m, c[i][j][m]) for m in range(r) if c[i][j][m]] for j in range(r)]
        for i in range(r)
    ]
    for i in range(r):
        for j in range(r):
            for k in range(r):
                lhs = [0] * r
                for m, cm in support[i][j]:
                    for l, cl in support[m][k]:
                        lhs[l] += cm * cl
                rhs = [0] * r
                for m, cm in support[j][k]:
                    for l, cl in support[i][m]:
                        rhs[l] += cm * cl
                if mod2:
                    lhs = [v % 2 for v in lhs]
                    rhs = [v % 2 for v in rhs]
                if lhs != rhs:
                    raise FusionError(f"associativity fails at ({i}, {j}, {k})")
    return True


@dataclass(frozen=True)
class WittRing:
    """Two-torsion Witt ring of a braided fusion input.

    ``basis`` records the selected simple indices and ``scalars`` their
    self-duality scalars (always 1).  When the source braiding is not
    symmetric only the additive group is defined: ``group_only`` is set and
    ``ring`` is None.
    """

    ring: BasedRing | None
    basis: tuple[int, ...]
    scalars: tuple[RootOfUnity, ...]
    group_only: bool

    @property
    def rank(self) -> int:
        return len(self.basis)


def witt_basis(fd: FusionData) -> tuple[int, ...]:
    """Indices of the Z_2 basis: self-dual simples with scalar 1."""
    return tuple(i for i in range(fd.rank) if fd.dual[i] == i and fd.scalars[i].is_one)


def witt_ring(fd: FusionData) -> WittRing:
    """The Witt ring of the fusion input (additive group only if braided).

    For a symmetric braiding the product of basis elements x, y is the full
    fusion product x (x) y reduced mod 2 with all non-basis components
    discarded.
    """
    basis = witt_basis(fd)
    scalars = tuple(fd.scalars[i] for i in basis)
    if not fd.symmetric:
        return WittRing(ring=None, basis=basis, scalars=scalars, group_only=True)
    if fd.unit not in basis:
        raise FusionError("the unit must lie in the Witt basis")
    pos = {b: t for t, b in enumerate(basis)}
    constants = [
        [
            [fd.tensor[i][j][k] % 2 for k in basis]
            for j in basis
        ]
        for i in basis
    ]
    ring = make_based_ring(
        coeff="Z2",
        labels=tuple(fd.labels[i] for i in basis),
        unit=pos[fd.unit],
        constants=constants,
        commutative=True,
    )
    return WittRing(ring=ring, basis=basis, scalars=scalars, group_only=False)


def grothendieck_ring(t: chartab.CharacterTableModP) -> BasedRing:
    """The character ring of the group as a based ring over Z."""
    N = chartab.fusion_coefficients(t)
    labels = tuple(f"chi{i + 1}" for i in range(t.nclasses))
    return make_based_ring(
        coeff="Z", labels=labels, unit=0, constants=N, commutative=True
    )


# --------------------------------------------------- based-ring isomorphism


def _refine_fingerprints(ring: BasedRing) -> tuple:
    r = ring.rank
    c = ring.constants
    fp = [(i == ring.unit,) for i in range(r)]
    for _ in range(r):
        nxt = []
        for i in range(r):
            left = sorted(
                (c[i][j][k], fp[j], fp[k])
                for j in range(r)
                for k in range(r)
                if c[i][j][k]
            )
            right = sorted(
                (c[j][i][k], fp[j], fp[k])
                for j in range(r)
                for k in range(r)
                if c[j][i][k]
            )
            result = sorted(
                (c[j][k][i], fp[j], fp[k])
                for j in range(r)
                for k in range(r)
                if c[j][k][i]
            )
            nxt.append((fp[i], tuple(left), tuple(right), tuple(result)))
        canon = sorted(set(nxt))
        new_fp = [(canon.index(k),) for k in nxt]
        if new_fp == fp:
            break
        fp = new_fp
    return tuple(fp)


def based_ring_isomorphism(
    R1: BasedRing, R2: BasedRing
) -> tuple[int, ...] | None:
    """A basis bijection preserving the unit and all structure constants.

    Exhaustive depth-first search over fingerprint-compatible images with
    incremental consistency checking; None after exhausting the search.
    """
    if R1.coeff != R2.coeff:
        raise FusionError("cannot compare based rings over different coefficients")
    r = R1.rank
    if r != R2.rank:
        return None
    fp1 = _refine_fingerprints(R1)
    fp2 = _refine_fingerprints(R2)
    if sorted(fp1) != sorted(fp2):
        return None
    cands = {i: [j for j in range(r) if fp2[j] == fp1[i]] for i in range(r)}
    order = sorted(range(r), key=lambda i: (len(cands[i]), i))
    if order[0] != R1.unit:
        order.remove(R1.unit)
        order.insert(0, R1.unit)
    c1, c2 = R1.constants, R2.constants
    sigma = [-1] * r
    used = [False] * r

    def consistent(t: int) -> bool:
        # only triples involving the newly assigned index need rechecking
        i = order[t]
        assigned = [order[s] for s in range(t + 1)]
        for a in assigned:
            for b in assigned:
                if c1[a][b][i] != c2[sigma[a]][sigma[b]][sigma[i]]:
                    return False
                if c1[a][i][b] != c2[sigma[a]][sigma[i]][sigma[b]]:
                    return False
                if c1[i][a][b] != c2[sigma[i]][sigma[a]][sigma[b]]:
                    return False
        return True

    def dfs(t: int):
        if t == r:
            return tuple(sigma)
        i = order[t]
        pool = [R2.unit] if i == R1.unit else cands[i]
        for j in pool:
            if used[j]:
                continue
            sigma[i] = j
            used[j] = True
            if consistent(t):
                got = dfs(t + 1)
                if got is not None:
                    return got
            used[j] = False
            sigma[i] = -1
        return None

    result = dfs(0)
    if result is None:
        return None
    for i in range(r):
        for j in range(r):
            for k in range(r):
                if c1[i][j][k] != c2[result[i]][result[j]][result[k]]:
                    raise FusionError("isomorphism search returned a bad map")
    return result


def ring_fingerprint(ring: BasedRing, max_rank: int = 12) -> str | None:
    """Canonical serialisation: lexicographically minimal constants tensor.

    Minimised over all unit-fixing basis orderings, comparing shell by shell
    (entries indexed by their maximal index, prefixed with the refinement
    class of the newly placed element), so two based rings are isomorphic
    exactly when their fingerprints agree.  The class prefix is sound
    because refinement classes are labelled by sorted invariant keys, hence
    identically across isomorphic rings, and it collapses the tie explosion
    on highly symmetric rings.  None above max_rank.
    """
    r = ring.rank
    if r > max_rank:
        return None
    c = ring.constants
    fp = _refine_fingerprints(ring)
    classes = sorted(set(fp))
    cls = [classes.index(k) for k in fp]
    best: list[tuple[int, ...]] | None = None

    def shell(perm: list[int], m: int) -> tuple[int, ...]:
        # entries whose maximal index is m, in lex order of (i, j, k)
        out = [cls[perm[m]]]
        for i in range(m + 1):
            for j in range(m + 1):
                for k in range(m + 1):
                    if max(i, j, k) == m:
                        out.append(c[perm[i]][perm[j]][perm[k]])
        return tuple(out)

    def dfs(perm: list[int], shells: list[tuple[int, ...]]):
        nonlocal best
        m = len(perm)
        if best is not None and shells > best[:m]:
            return
        if m == r:
            if best is None or shells < best:
                best = shells
            return
        pool = [x for x in range(r) if x not in perm and (m == 0) == (x == ring.unit)]
        branches = sorted((shell(perm + [x], m), x) for x in pool)
        for sh, x in branches:
            dfs(perm + [x], shells + [sh])

    dfs([], [])
    assert best is not None
    flat = ",".join(str(v) for sh in best for v in sh)
    return f"{ring.coeff}[{r}]:{flat}"


# -------------------------------------------------- fusion data from groups


def fusion_data_from_table(
    t: chartab.CharacterTableModP, u: int | None = None
) -> FusionData:
    """Fusion data of the representation category, with its symmetric braiding.

    With a central involution ``u`` the braiding is twisted: the selection
    scalar of a self-dual simple becomes nu_2 * (chi(u) / chi(1)).
    """
    G = t.group
    dual = chartab.dual_involution(t)
    nu = chartab.fs_vector(t)
    r = t.nclasses
    signs = [1] * r
    if u is not None:
        if G.power(u, 2) != 0:
            raise FusionError("twisting element must square to the identity")
        if any(G.cayley[u][x] != G.cayley[x][u] for x in range(G.order)):
            raise FusionError("twisting element must be central")
        ku = t.classes.class_of[u]
        p = t.p
        for i in range(r):
            val = (t.values[i][ku] * pow(t.degrees[i], -1, p)) % p
            if val == 1 % p:
                signs[i] = 1
            elif val == p - 1:
                signs[i] = -1
            else:
                raise FusionError("central involution acts by a non-sign scalar")
    scalars = tuple(
        root_of_sign(nu[i] * signs[i]) if dual[i] == i and nu[i] != 0 else ONE
        for i in range(r)
    )
    labels = tuple(f"chi{i + 1}" for i in range(r))
    return make_fusion_data(
        labels=labels,
        unit=0,
        dual=dual,
        scalars=scalars,
        tensor=chartab.fusion_coefficients(t),
        symmetric=True,
    )


def rep_g_fusion_data(G: FiniteGroup) -> FusionData:
    return fusion_data_from_table(chartab.burnside_dixon(G))


def rep_g_u_fusion_data(G: FiniteGroup, u: int) -> FusionData:
    return fusion_data_from_table(chartab.burnside_dixon(G), u=u)


# ------------------------------------------------------------ abelian doubles


@dataclass(frozen=True)
class DoubleWittResult:
    """Witt data of the quantum double of an abelian group.

    Simple objects are pairs (group element, character); the self-dual ones
    with a symmetric pairing are exactly the pairs (g, psi) with g^2 = 1,
    psi^2 = 1 and psi(g) = 1.  The braiding is not symmetric in general, so
    only the additive rank is reported.
    """

    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    rank: int
    group_only: bool = True


def double_abelian_witt(A: AbelianStructure) -> DoubleWittResult:
    dual: DualGroup = characters_of_abelian(A)
    pairs = []
    for g in itertools.product(*(range(d) for d in A.factors)):
        if any((2 * a) % d for a, d in zip(g, A.factors)):
            continue
        for char in dual.characters:
            if any((2 * e) % d for e, d in zip(char, A.factors)):
                continue
            if dual.pairing_exponent(char, g) != 0:
                continue
            pairs.append((g, char))
    return DoubleWittResult(pairs=tuple(pairs), rank=len(pairs))


# ----------------------------------------------------------- tiny fixtures


def vec_z2_fixture(which: str) -> FusionData:
    """Graded vector spaces on Z_2 with one of the four braidings.

    ``b0``/``b1`` are the symmetric braidings on the untwisted category (the
    non-unit simple has scalar +1, resp. -1); ``bi``/``b-i`` are the two
    non-symmetric braidings on the twisted category, with scalar +-i, where
    the non-unit simple is not even weakly symmetric.
    """
    scalars = {
        "b0": (ONE, ONE),
        "b1": (ONE, MINUS_ONE),
        "bi": (ONE, IMAG),
        "b-i": (ONE, root_of_unity(3, 4)),
    }.get(which)
    if scalars is None:
        raise FusionError(f"unknown fixture {which!r}")
    tensor = (((1, 0), (0, 1)), ((0, 1), (1, 0)))
    return make_fusion_data(
        labels=("1", "x"),
        unit=0,
        dual=(0, 1),
        scalars=scalars,
        tensor=tensor,
        symmetric=which in ("b0", "b1"),
    )
