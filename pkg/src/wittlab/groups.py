"""Finite groups as exact Cayley tables.

Everything in this package ultimately reduces to the :class:`FiniteGroup`
record defined here: a multiplication table on ``{0, ..., n-1}`` with 0 as
the identity.  All derived data (conjugacy classes, subgroups, products,
order statistics, isomorphisms) is computed exactly over the integers and
deterministically: the same input always produces byte-identical output.

Groups and all derived records are immutable after construction and safe to
share across threads; every public function here is pure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


class GroupError(ValueError):
    """Input data fails to define a valid group, subgroup or action."""


# --------------------------------------------------------------- FiniteGroup


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on the element set {0, ..., n-1} with identity 0."""

    cayley: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    generators: tuple[int, ...]
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.cayley)

    def mul(self, x: int, y: int) -> int:
        return self.cayley[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def conj(self, g: int, x: int) -> int:
        """The conjugate g x g^-1."""
        return self.cayley[self.cayley[g][x]][self.inverse[g]]

    def commutator(self, x: int, y: int) -> int:
        """x^-1 y^-1 x y."""
        a = self.cayley[self.inverse[x]][self.inverse[y]]
        return self.cayley[self.cayley[a][x]][y]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse[x], -k
        acc = 0
        for _ in range(k):
            acc = self.cayley[acc][x]
        return acc

    def element_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != 0:
            acc = self.cayley[acc][x]
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for x in range(self.order):
            e = math.lcm(e, self.element_order(x))
        return e

    def is_abelian(self) -> bool:
        cay = self.cayley
        n = self.order
        return all(cay[x][y] == cay[y][x] for x in range(n) for y in range(x + 1, n))

    def center(self) -> tuple[int, ...]:
        cay = self.cayley
        gens = self.generators
        return tuple(
            x for x in range(self.order) if all(cay[x][g] == cay[g][x] for g in gens)
        )

    def __repr__(self) -> str:  # keep reprs short; tables can be huge
        label = self.name or "?"
        return f"FiniteGroup(order={self.order}, name={label!r})"


def _check_table(rows: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Verify the group axioms on a Cayley table; return the inverse table.

    Associativity is checked on all n^3 triples up to n = 256; above that a
    fixed-seed sample of triples is checked instead (the row and column
    permutation checks always run in full).
    """
    n = len(rows)
    if n == 0:
        raise GroupError("a group needs at least the identity element")
    full = list(range(n))
    for x, row in enumerate(rows):
        if len(row) != n:
            raise GroupError(f"row {x} has length {len(row)}, expected {n}")
        if sorted(row) != full:
            raise GroupError(f"row {x} is not a permutation of 0..{n - 1}")
        if row[0] != x or rows[0][x] != x:
            raise GroupError("element 0 does not act as the identity")
    for y in range(n):
        if sorted(rows[x][y] for x in range(n)) != full:
            raise GroupError(f"column {y} is not a permutation of 0..{n - 1}")
    inverse = [0] * n
    for x in range(n):
        inverse[x] = rows[x].index(0)
        if rows[inverse[x]][x] != 0:
            raise GroupError(f"element {x} has no two-sided inverse")
    if n <= 256:
        for x in range(n):
            rx = rows[x]
            for y in range(n):
                rxy = rows[rx[y]]
                ry = rows[y]
                for z in range(n):
                    if rxy[z] != rx[ry[z]]:
                        raise GroupError(f"associativity fails at ({x}, {y}, {z})")
    else:
        state = 0x9E3779B97F4A7C15
        for _ in range(200_000):
            state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
            x = (state >> 16) % n
            y = (state >> 32) % n
            z = (state >> 48) % n
            if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
                raise GroupError(f"associativity fails at ({x}, {y}, {z})")
    return tuple(inverse)


def make_group(rows, generators=None, name: str = "") -> FiniteGroup:
    """Build a validated FiniteGroup from a Cayley table.

    ``generators`` defaults to a greedily chosen short generating sequence.
    """
    table = tuple(tuple(int(v) for v in row) for row in rows)
    inverse = _check_table(table)
    g = FiniteGroup(cayley=table, inverse=inverse, generators=(), name=name)
    if generators is None:
        gens = minimal_generating_sequence(g)
    else:
        gens = tuple(int(x) for x in generators)
        for x in gens:
            if not 0 <= x < len(table):
                raise GroupError(f"generator index {x} out of range")
        if len(generated_subgroup(g, gens)) != len(table):
            raise GroupError("declared generators do not generate the group")
    return FiniteGroup(cayley=table, inverse=inverse, generators=gens, name=name)


def generated_subgroup(G: FiniteGroup, elements) -> tuple[int, ...]:
    """Sorted element set of the subgroup generated by ``elements``."""
    gens = set()
    for x in elements:
        gens.add(x)
        gens.add(G.inverse[x])
    seen = {0}
    frontier = [0]
    cay = G.cayley
    while frontier:
        nxt = []
        for x in frontier:
            row = cay[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def minimal_generating_sequence(G: FiniteGroup) -> tuple[int, ...]:
    """Short generating sequence, found greedily by maximal subgroup growth.

    Ties break towards the smallest element index, so the result is
    deterministic for a given Cayley table.
    """
    n = G.order
    gens: list[int] = []
    current = (0,)
    current_set = {0}
    while len(current) < n:
        best_x, best_size, best_set = -1, 0, None
        for x in range(1, n):
            if x in current_set:
                continue
            cand = generated_subgroup(G, gens + [x])
            if len(cand) > best_size:
                best_x, best_size, best_set = x, len(cand), cand
                if best_size == n:
                    break
        gens.append(best_x)
        current = best_set
        current_set = set(best_set)
    return tuple(gens)


# ------------------------------------------------------------ class structure


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy class data with deterministic ordering.

    Classes are sorted by (element order of representative, class size,
    minimal element index); class 0 is always {identity}.  ``power_map[k][m]``
    is the class of ``reps[k] ** m`` for every ``0 <= m < exponent``.
    """

    reps: tuple[int, ...]
    class_of: tuple[int, ...]
    sizes: tuple[int, ...]
    rep_orders: tuple[int, ...]
    inverse_class: tuple[int, ...]
    power_map: tuple[tuple[int, ...], ...]
    exponent: int


def conjugacy_classes(G: FiniteGroup) -> ConjugacyClasses:
    n = G.order
    gens = set(G.generators) | {G.inverse[g] for g in G.generators}
    assigned = [-1] * n
    orbits = []
    for x in range(n):
        if assigned[x] >= 0:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = G.conj(g, y)
                    if z not in orbit:
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        idx = len(orbits)
        for y in orbit:
            assigned[y] = idx
        orbits.append(sorted(orbit))
    orbits.sort(key=lambda orb: (G.element_order(orb[0]), len(orb), orb[0]))
    reps = tuple(orb[0] for orb in orbits)
    class_of = [0] * n
    for k, orb in enumerate(orbits):
        for y in orb:
            class_of[y] = k
    sizes = tuple(len(orb) for orb in orbits)
    if sum(sizes) != n or any(n % s for s in sizes):
        raise GroupError("conjugacy class sizes are inconsistent")
    rep_orders = tuple(G.element_order(r) for r in reps)
    exponent = 1
    for m in rep_orders:
        exponent = math.lcm(exponent, m)
    inverse_class = tuple(class_of[G.inverse[r]] for r in reps)
    if any(inverse_class[inverse_class[k]] != k for k in range(len(reps))):
        raise GroupError("inverse-class map is not an involution")
    power_map = []
    for r in reps:
        row = []
        acc = 0
        for _ in range(exponent):
            row.append(class_of[acc])
            acc = G.cayley[acc][r]
        power_map.append(tuple(row))
    return ConjugacyClasses(
        reps=reps,
        class_of=tuple(class_of),
        sizes=sizes,
        rep_orders=rep_orders,
        inverse_class=inverse_class,
        power_map=tuple(power_map),
        exponent=exponent,
    )


def order_profile(G: FiniteGroup) -> dict[int, int]:
    """Exact count of elements of each order, as {order: count}."""
    prof: dict[int, int] = {}
    for x in range(G.order):
        m = G.element_order(x)
        prof[m] = prof.get(m, 0) + 1
    return dict(sorted(prof.items()))


# ------------------------------------------------------------------- products


def cyclic(n: int, name: str = "") -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    gens = (1,) if n > 1 else ()
    return make_group(rows, generators=gens, name=name or f"z{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str = "") -> FiniteGroup:
    """Direct product with element (g, h) at index g*|H| + h."""
    nh = H.order
    n = G.order * nh
    rows = [[0] * n for _ in range(n)]
    for g1, h1 in itertools.product(range(G.order), range(nh)):
        row = rows[g1 * nh + h1]
        for g2, h2 in itertools.product(range(G.order), range(nh)):
            row[g2 * nh + h2] = G.cayley[g1][g2] * nh + H.cayley[h1][h2]
    gens = tuple(g * nh for g in G.generators) + tuple(H.generators)
    return make_group(rows, generators=gens, name=name)


def abelian_group(factors, name: str = "") -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    factors = tuple(int(d) for d in factors)
    if not factors:
        return make_group([[0]], generators=(), name=name or "trivial")
    G = cyclic(factors[0])
    for d in factors[1:]:
        G = direct_product(G, cyclic(d))
    label = name or "z" + "x".join(str(d) for d in factors)
    return make_group(G.cayley, generators=G.generators, name=label)


def semidirect_product(
    N: FiniteGroup, Q: FiniteGroup, action, name: str = ""
) -> FiniteGroup:
    """Semidirect product N x| Q for a verified action of Q on N.

    ``action[q]`` must be an automorphism of N (a length-|N| permutation) and
    q -> action[q] a homomorphism.  Elements are pairs (x, q) at index
    q*|N| + x with product (x1, q1)(x2, q2) = (x1 * q1(x2), q1 q2), so N
    embeds normally as the first |N| indices.
    """
    nn, nq = N.order, Q.order
    action = tuple(tuple(int(v) for v in action[q]) for q in range(nq))
    if len(action) != nq:
        raise GroupError("action must assign one automorphism per element of Q")
    for q in range(nq):
        perm = action[q]
        if sorted(perm) != list(range(nn)) or perm[0] != 0:
            raise GroupError(f"action of {q} is not a bijection fixing the identity")
        for x in range(nn):
            for y in range(nn):
                if perm[N.cayley[x][y]] != N.cayley[perm[x]][perm[y]]:
                    raise GroupError(f"action of {q} is not an automorphism of N")
    for q1 in range(nq):
        for q2 in range(nq):
            composite = action[Q.cayley[q1][q2]]
            for x in range(nn):
                if composite[x] != action[q1][action[q2][x]]:
                    raise GroupError("action does not respect multiplication in Q")
    n = nn * nq
    rows = [[0] * n for _ in range(n)]
    for q1, x1 in itertools.product(range(nq), range(nn)):
        row = rows[q1 * nn + x1]
        act1 = action[q1]
        for q2, x2 in itertools.product(range(nq), range(nn)):
            row[q2 * nn + x2] = Q.cayley[q1][q2] * nn + N.cayley[x1][act1[x2]]
    gens = tuple(N.generators) + tuple(q * nn for q in Q.generators)
    return make_group(rows, generators=gens, name=name)


# ------------------------------------------------------------------ subgroups


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup as a sorted element set, with structural flags."""

    elements: tuple[int, ...]
    normal: bool
    abelian: bool
    central: bool

    @property
    def order(self) -> int:
        return len(self.elements)


def _subgroup_flags(G: FiniteGroup, elems: tuple[int, ...]) -> SubgroupSet:
    sset = set(elems)
    normal = all(G.conj(g, x) in sset for g in G.generators for x in elems)
    abelian = all(
        G.cayley[x][y] == G.cayley[y][x]
        for i, x in enumerate(elems)
        for y in elems[i + 1 :]
    )
    central = all(G.cayley[x][g] == G.cayley[g][x] for x in elems for g in G.generators)
    return SubgroupSet(elements=elems, normal=normal, abelian=abelian, central=central)


def normal_closure(G: FiniteGroup, x: int) -> tuple[int, ...]:
    """Smallest normal subgroup containing x."""
    gens = set(G.generators) | {G.inverse[g] for g in G.generators}
    orbit = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in gens:
                z = G.conj(g, y)
                if z not in orbit:
                    orbit.add(z)
                    nxt.append(z)
        frontier = nxt
    return generated_subgroup(G, orbit)


def normal_subgroups(G: FiniteGroup) -> tuple[SubgroupSet, ...]:
    """All normal subgroups of G.

    Computed as the join-closure of the normal closures of single elements;
    every normal subgroup is a join of such closures, so the list is complete.
    Sorted by (order, element tuple).
    """
    found: set[tuple[int, ...]] = {(0,)}
    for x in range(1, G.order):
        found.add(normal_closure(G, x))
    changed = True
    while changed:
        changed = False
        pairs = itertools.combinations(sorted(found), 2)
        for a, b in pairs:
            if set(a) <= set(b) or set(b) <= set(a):
                continue
            join = generated_subgroup(G, set(a) | set(b))
            if join not in found:
                found.add(join)
                changed = True
    ordered = sorted(found, key=lambda t: (len(t), t))
    return tuple(_subgroup_flags(G, elems) for elems in ordered)


def derived_subgroup(G: FiniteGroup) -> tuple[int, ...]:
    comms = {G.commutator(x, y) for x in range(G.order) for y in range(G.order)}
    return generated_subgroup(G, comms)


# ----------------------------------------------------------- abelian structure


@dataclass(frozen=True)
class AbelianStructure:
    """Invariant factors d1 | d2 | ... | dk (each > 1) with generators.

    ``generators[i]`` is an ambient-group element of order ``factors[i]``,
    and the products gen_1^e1 * ... * gen_k^ek enumerate the subgroup once
    each.  The trivial group has no factors.
    """

    factors: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.factors) if self.factors else 1


def _p_group_basis(elems: list[int], mul, order_of, p: int) -> list[int]:
    """Basis of a finite abelian p-group given as (elements, mul, order).

    A cyclic subgroup of maximal order is a direct summand, so one basis
    element of maximal order is chosen, the quotient is handled recursively
    and its basis elements are lifted back with a power-of-g correction.
    """
    m = len(elems)
    if m == 1:
        return []
    ident = next(x for x in elems if order_of(x) == 1)
    g = max(elems, key=lambda x: (order_of(x), -x))
    og = order_of(g)
    if og == m:
        return [g]
    dlog = {ident: 0}
    acc, e = g, 1
    while acc != ident:
        dlog[acc] = e
        acc = mul(acc, g)
        e += 1
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for x in sorted(elems):
        if x in coset_of:
            continue
        members = sorted(mul(x, h) for h in dlog)
        idx = len(reps)
        for y in members:
            coset_of[y] = idx
        reps.append(members[0])
    qident = reps[coset_of[ident]]

    def qmul(a: int, b: int) -> int:
        return reps[coset_of[mul(a, b)]]

    def qorder(a: int) -> int:
        start = reps[coset_of[a]]
        if start == qident:
            return 1
        k, cur = 1, start
        while cur != qident:
            cur = qmul(cur, start)
            k += 1
        return k

    sub = _p_group_basis(reps, qmul, qorder, p)
    lifted = [g]
    for ybar in sub:
        f = qorder(ybar)
        y = ybar
        yf = ident
        for _ in range(f):
            yf = mul(yf, y)
        t = dlog[yf]
        if t % f != 0:
            raise GroupError("abelian basis lift failed")
        corr = ident
        for _ in range((og - t // f) % og):
            corr = mul(corr, g)
        y = mul(y, corr)
        yf = ident
        for _ in range(f):
            yf = mul(yf, y)
        if yf != ident:
            raise GroupError("abelian basis lift failed")
        lifted.append(y)
    return lifted


def abelian_invariants(G: FiniteGroup, subgroup) -> AbelianStructure:
    """Invariant-factor decomposition of an abelian subgroup of G."""
    if isinstance(subgroup, SubgroupSet):
        elems = list(subgroup.elements)
    else:
        elems = sorted(set(subgroup))
    eset = set(elems)
    for x in elems:
        for y in elems:
            if G.cayley[x][y] not in eset:
                raise GroupError("subgroup set is not closed under multiplication")
            if G.cayley[x][y] != G.cayley[y][x]:
                raise GroupError("subgroup is not abelian")
    if 0 not in eset:
        raise GroupError("subgroup must contain the identity")
    m = len(elems)
    if m == 1:
        return AbelianStructure(factors=(), generators=())
    primes = sorted({p for p in range(2, m + 1) if m % p == 0 and _is_prime(p)})
    per_prime: dict[int, list[tuple[int, int]]] = {}
    for p in primes:
        part = [x for x in elems if _is_p_power(G.element_order(x), p)]
        basis = _p_group_basis(part, G.mul, G.element_order, p)
        per_prime[p] = sorted(
            ((G.element_order(x), x) for x in basis), reverse=True
        )
    width = max(len(v) for v in per_prime.values())
    factors: list[int] = []
    gens: list[int] = []
    for i in range(width):
        d = 1
        g = 0
        for p in primes:
            if i < len(per_prime[p]):
                o, x = per_prime[p][i]
                d *= o
                g = G.cayley[g][x]
        factors.append(d)
        gens.append(g)
    factors.reverse()
    gens.reverse()
    for i in range(len(factors) - 1):
        if factors[i + 1] % factors[i]:
            raise GroupError("invariant factors failed the divisibility chain")
    if math.prod(factors) != m:
        raise GroupError("invariant factors do not multiply to the subgroup order")
    return AbelianStructure(factors=tuple(factors), generators=tuple(gens))


def abelian_coordinates(G: FiniteGroup, A: AbelianStructure) -> dict[int, tuple[int, ...]]:
    """Map each subgroup element to its exponent tuple over A's generators."""
    coords: dict[int, tuple[int, ...]] = {}
    for expo in itertools.product(*(range(d) for d in A.factors)):
        x = 0
        for g, e in zip(A.generators, expo):
            x = G.cayley[x][G.power(g, e)]
        if x in coords:
            raise GroupError("generators are not independent")
        coords[x] = expo
    if not A.factors:
        coords[0] = ()
    return coords


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# -------------------------------------------------------- characters (abelian)


@dataclass(frozen=True)
class DualGroup:
    """Character group of a finite abelian group, in coordinates.

    A character is an exponent vector e; its value on the element with
    coordinates a is zeta_N ** pairing_exponent(e, a) where N is the largest
    invariant factor.  The pairing is bimultiplicative and nondegenerate.
    """

    factors: tuple[int, ...]
    characters: tuple[tuple[int, ...], ...]
    modulus: int

    def pairing_exponent(self, char: tuple[int, ...], coords: tuple[int, ...]) -> int:
        N = self.modulus
        total = 0
        for e, a, d in zip(char, coords, self.factors):
            total += e * a * (N // d)
        return total % N


def characters_of_abelian(A: AbelianStructure) -> DualGroup:
    factors = A.factors
    N = factors[-1] if factors else 1
    chars = tuple(itertools.product(*(range(d) for d in factors)))
    if not factors:
        chars = ((),)
    return DualGroup(factors=factors, characters=chars, modulus=N)


# ---------------------------------------------------------------- isomorphism


def _iso_invariants(G: FiniteGroup):
    cc = conjugacy_classes(G)
    profile = tuple(sorted(order_profile(G).items()))
    class_shape = tuple(sorted(zip(cc.rep_orders, cc.sizes)))
    return (
        G.order,
        profile,
        class_shape,
        len(G.center()),
        len(derived_subgroup(G)),
    )


_INVARIANT_NAMES = (
    "order",
    "order profile",
    "conjugacy class shape",
    "center size",
    "derived subgroup size",
)


def isomorphism_obstruction(G: FiniteGroup, H: FiniteGroup) -> str | None:
    """Name of a cheap invariant separating G and H, if one exists.

    Returns None when all the cheap invariants agree (the groups may then
    still be non-isomorphic; an exhausted search is the remaining witness).
    """
    for name, a, b in zip(_INVARIANT_NAMES, _iso_invariants(G), _iso_invariants(H)):
        if a != b:
            return name
    if G.is_abelian() and H.is_abelian():
        ia = abelian_invariants(G, range(G.order)).factors
        ib = abelian_invariants(H, range(H.order)).factors
        if ia != ib:
            return "abelian invariants"
    return None


def _hom_from_images(G: FiniteGroup, H: FiniteGroup, gens, imgs):
    """Extend gens -> imgs to a map on <gens>, or None if inconsistent.

    Returns (phi, reached) where phi maps every element of the subgroup
    generated by ``gens`` and satisfies phi(x * g) = phi(x) * phi(g) along
    every right-multiplication edge, which forces phi to be a homomorphism.
    """
    phi = {0: 0}
    frontier = [0]
    reached = [0]
    while frontier:
        nxt = []
        for x in frontier:
            fx = phi[x]
            for g, h in zip(gens, imgs):
                y = G.cayley[x][g]
                w = H.cayley[fx][h]
                got = phi.get(y)
                if got is None:
                    phi[y] = w
                    nxt.append(y)
                    reached.append(y)
                elif got != w:
                    return None
        frontier = nxt
    return phi, reached


def isomorphisms_iter(G: FiniteGroup, H: FiniteGroup):
    """Yield every isomorphism G -> H as a length-|G| tuple.

    Backtracking on the images of a greedy minimal generating sequence,
    pruned by element order and conjugacy class size of candidate images.
    """
    if G.order != H.order:
        return
    n = G.order
    gens = minimal_generating_sequence(G)
    if not gens:
        yield (0,)
        return
    ccH = conjugacy_classes(H)
    hoods = {}
    for x in range(n):
        key = (H.element_order(x), ccH.sizes[ccH.class_of[x]])
        hoods.setdefault(key, []).append(x)
    ccG = conjugacy_classes(G)
    chain_sizes = [
        len(generated_subgroup(G, gens[: t + 1])) for t in range(len(gens))
    ]

    def candidates(t: int) -> list[int]:
        g = gens[t]
        key = (G.element_order(g), ccG.sizes[ccG.class_of[g]])
        return hoods.get(key, [])

    imgs: list[int] = []

    def dfs(t: int):
        if t == len(gens):
            phi, reached = _hom_from_images(G, H, gens, imgs)
            if phi is not None and len(reached) == n and len(set(phi.values())) == n:
                yield tuple(phi[x] for x in range(n))
            return
        for cand in candidates(t):
            imgs.append(cand)
            ext = _hom_from_images(G, H, gens[: t + 1], imgs)
            if ext is not None:
                phi, reached = ext
                if len(reached) == chain_sizes[t] == len(set(phi.values())):
                    yield from dfs(t + 1)
            imgs.pop()

    yield from dfs(0)


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> tuple[int, ...] | None:
    """An explicit isomorphism G -> H as a length-|G| map, or None.

    When None is returned, ``isomorphism_obstruction`` names a distinguishing
    invariant if a cheap one exists; otherwise the search was exhausted.
    """
    if isomorphism_obstruction(G, H) is not None:
        return None
    if G.is_abelian() and H.is_abelian():
        sa = abelian_invariants(G, range(G.order))
        sb = abelian_invariants(H, range(H.order))
        if sa.factors != sb.factors:
            return None
        coords = abelian_coordinates(G, sa)
        phi = [0] * G.order
        for x, expo in coords.items():
            y = 0
            for g, e in zip(sb.generators, expo):
                y = H.cayley[y][H.power(g, e)]
            phi[x] = y
        return tuple(phi)
    return next(isomorphisms_iter(G, H), None)


# -------------------------------------------------------------- serialisation


def format_group_dump(G: FiniteGroup) -> str:
    """Canonical line-oriented dump: order, name, generators, Cayley rows.

    The format is byte-stable across runs and documented in the README.
    """
    lines = [f"order {G.order}"]
    if G.name:
        lines.append(f'name "{G.name}"')
    lines.append("gens " + " ".join(str(g) for g in G.generators))
    for row in G.cayley:
        lines.append("row " + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
