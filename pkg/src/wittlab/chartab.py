"""Exact irreducible character tables by eigenspace splitting mod p.

The classical Burnside-Dixon method: the class sums K_i span the centre of
the group algebra and satisfy K_i K_j = sum_k a[i][j][k] K_k with integer
class multiplication coefficients.  Working modulo a prime p with
p = 1 (mod exponent) and p > 2|G|, the matrices A_i = (a[i][j][k])_{jk}
share the r one-dimensional eigenspaces spanned by the vectors
w = (omega_1, ..., omega_r), omega_k = |C_k| chi(g_k) / chi(1), one per
irreducible character.  Splitting the common eigenspaces matrix by matrix
recovers every omega-vector exactly; degrees and character values follow
from the orthogonality relations, and unique integer lifts exist because p
exceeds twice every quantity that occurs.

Cyclotomic values are recovered per table entry as root-of-unity
multiplicity vectors via the discrete Fourier transform over F_p, so the
lifted table is exact over Z[zeta].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groups import ConjugacyClasses, FiniteGroup, conjugacy_classes

__all__ = [
    "CharacterTableModP",
    "CharacterTable",
    "CycloValue",
    "class_mult_coeffs",
    "burnside_dixon",
    "lift_to_cyclotomic",
    "fs_indicator",
    "fs_vector",
    "dual_involution",
    "fusion_coefficients",
    "self_dual_count",
]


class TableError(RuntimeError):
    """Internal inconsistency while building a character table."""


# ------------------------------------------------------------- small number theory


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*order."""
    k = (2 * order) // exponent + 1
    while True:
        p = k * exponent + 1
        if p > 2 * order and _is_prime(p):
            return p
        k += 1


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    facs = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in facs):
            return g
    raise TableError(f"no primitive root mod {p}")


# --------------------------------------------------------- linear algebra mod p


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col] % p
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _kernel(M: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of the m x m matrix M over F_p."""
    m = len(M)
    red, pivots = _rref([row[:] for row in M], p)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][fc]) % p
        basis.append(v)
    return basis


def _hessenberg(M: list[list[int]], p: int) -> list[list[int]]:
    """Similarity-reduce M to upper Hessenberg form over F_p."""
    H = [row[:] for row in M]
    m = len(H)
    for j in range(m - 2):
        pivot = next((i for i in range(j + 1, m) if H[i][j] % p), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            H[j + 1], H[pivot] = H[pivot], H[j + 1]
            for row in H:
                row[j + 1], row[pivot] = row[pivot], row[j + 1]
        inv = pow(H[j + 1][j], -1, p)
        for i in range(j + 2, m):
            c = (H[i][j] * inv) % p
            if c:
                H[i] = [(a - c * b) % p for a, b in zip(H[i], H[j + 1])]
                for row in H:
                    row[j + 1] = (row[j + 1] + c * row[i]) % p
    return H


def charpoly_modp(M: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial of M over F_p, low-degree coefficients first.

    Hessenberg reduction followed by the leading-minor recurrence; O(m^3).
    """
    m = len(M)
    if m == 0:
        return [1]
    H = _hessenberg(M, p)
    # polys[k] = charpoly of the leading k x k block, as coefficient list
    polys: list[list[int]] = [[1]]
    for k in range(1, m + 1):
        # (x - H[k-1][k-1]) * polys[k-1]
        prev = polys[k - 1]
        cur = [0] * (len(prev) + 1)
        for i, c in enumerate(prev):
            cur[i + 1] = (cur[i + 1] + c) % p
            cur[i] = (cur[i] - c * H[k - 1][k - 1]) % p
        beta = 1
        for j in range(1, k):
            beta = (beta * H[k - j][k - j - 1]) % p
            if beta == 0:
                break
            coeff = (H[k - 1 - j][k - 1] * beta) % p
            if coeff:
                lower = polys[k - 1 - j]
                for i, c in enumerate(lower):
                    cur[i] = (cur[i] - coeff * c) % p
        polys.append(cur)
    return polys[m]


def poly_roots_modp(coeffs: list[int], p: int) -> list[int]:
    """All roots in F_p, by direct scan (p stays small at this scale)."""
    roots = []
    for lam in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * lam + c) % p
        if acc == 0:
            roots.append(lam)
    return roots


# ------------------------------------------------------------------ the tables


@dataclass(frozen=True)
class CharacterTableModP:
    """Irreducible characters of G as residues mod a Dixon prime.

    Rows are sorted by (degree, value vector); row 0 is always the trivial
    character.  ``values[i][k]`` is chi_i at the class-k representative.
    """

    group: FiniteGroup
    classes: ConjugacyClasses
    p: int
    z: int  # primitive root mod p
    degrees: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]

    @property
    def nclasses(self) -> int:
        return len(self.classes.reps)


@dataclass(frozen=True)
class CycloValue:
    """Exact character value sum_l mult[l] * zeta_order^l."""

    order: int
    mult: tuple[tuple[int, int], ...]  # sorted (exponent, multiplicity), mult > 0

    def to_complex(self) -> complex:
        tau = 2.0 * math.pi / self.order
        return sum(
            m * complex(math.cos(tau * l), math.sin(tau * l)) for l, m in self.mult
        )

    def __str__(self) -> str:
        if not self.mult:
            return "0"
        parts = []
        for l, m in self.mult:
            if l == 0:
                parts.append(str(m))
            elif 2 * l == self.order:
                parts.append(f"-{m}" if m > 1 else "-1")
            else:
                base = f"z{self.order}" if l == 1 else f"z{self.order}^{l}"
                parts.append(base if m == 1 else f"{m}*{base}")
        return "+".join(parts).replace("+-", "-")


@dataclass(frozen=True)
class CharacterTable:
    """Mod-p table plus exact cyclotomic value lifts."""

    modp: CharacterTableModP
    cyclo: tuple[tuple[CycloValue, ...], ...]
    exponent: int


def class_mult_coeffs(G: FiniteGroup, cc: ConjugacyClasses) -> list[list[list[int]]]:
    """a[i][j][k] = #{(x, y) in C_i x C_j : x y = z} for fixed z in C_k.

    Independent of the representative z; computed by factoring z = x * y
    with x running over C_i.
    """
    r = len(cc.reps)
    members: list[list[int]] = [[] for _ in range(r)]
    for x in range(G.order):
        members[cc.class_of[x]].append(x)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, z in enumerate(cc.reps):
        for i in range(r):
            row = a[i]
            for x in members[i]:
                y = G.cayley[G.inverse[x]][z]
                row[cc.class_of[y]][k] += 1
    return a


def burnside_dixon(G: FiniteGroup) -> CharacterTableModP:
    """Compute the irreducible character table of G modulo a Dixon prime."""
    cc = conjugacy_classes(G)
    r = len(cc.reps)
    n = G.order
    p = dixon_prime(n, cc.exponent)
    z = primitive_root(p)
    a = class_mult_coeffs(G, cc)
    mats = [[[a[i][j][k] % p for k in range(r)] for j in range(r)] for i in range(r)]

    spaces: list[list[list[int]]] = [[[1 if c == t else 0 for c in range(r)] for t in range(r)]]
    if r == 1:
        spaces = [[[1]]]
    for i in range(1, r):
        if all(len(B) == 1 for B in spaces):
            break
        new_spaces: list[list[list[int]]] = []
        for B in spaces:
            m = len(B)
            if m == 1:
                new_spaces.append(B)
                continue
            Bred, pivots = _rref(B, p)
            # restriction of A_i: columns of the subspace in pivot coordinates
            AB = [
                [sum(Bred[t][kk] * mats[i][j][kk] for kk in range(r)) % p for t in range(m)]
                for j in range(r)
            ]
            M = [[AB[pivots[s]][t] for t in range(m)] for s in range(m)]
            for lam in poly_roots_modp(charpoly_modp(M, p), p):
                shifted = [
                    [(M[s][t] - (lam if s == t else 0)) % p for t in range(m)]
                    for s in range(m)
                ]
                kernel = _kernel(shifted, p)
                full = [
                    [sum(vec[t] * Bred[t][c] for t in range(m)) % p for c in range(r)]
                    for vec in kernel
                ]
                red, _ = _rref(full, p)
                new_spaces.append(red)
        spaces = new_spaces
    if not all(len(B) == 1 for B in spaces) or len(spaces) != r:
        raise TableError("eigenspace splitting failed to fully diagonalise")

    inv_sizes = [pow(s, -1, p) for s in cc.sizes]
    rows = []
    for B in spaces:
        v = B[0]
        if v[0] % p == 0:
            raise TableError("eigenvector vanishes at the identity class")
        norm = pow(v[0], -1, p)
        omega = [(x * norm) % p for x in v]
        s = sum(omega[k] * omega[cc.inverse_class[k]] * inv_sizes[k] for k in range(r)) % p
        if s == 0:
            raise TableError("degree denominator vanished")
        d2 = (n * pow(s, -1, p)) % p
        if d2 > n:
            raise TableError("degree square lift out of range")
        d = math.isqrt(d2)
        if d * d != d2 or d == 0:
            raise TableError("degree is not a perfect square lift")
        if n % d:
            raise TableError("degree does not divide the group order")
        chi = tuple((d * omega[k] * inv_sizes[k]) % p for k in range(r))
        rows.append((d, chi))
    rows.sort(key=lambda t: (t[0], t[1]))
    degrees = tuple(d for d, _ in rows)
    values = tuple(chi for _, chi in rows)
    if sum(d * d for d in degrees) != n:
        raise TableError("degrees fail sum of squares")
    if values[0] != tuple([1] * r):
        raise TableError("trivial character is not the first row")
    # row orthogonality: sum_k |C_k| chi_i(k) chi_j(k*) = delta_ij |G|
    for i in range(r):
        for j in range(r):
            tot = sum(
                cc.sizes[k] * values[i][k] * values[j][cc.inverse_class[k]]
                for k in range(r)
            ) % p
            if tot != (n % p if i == j else 0):
                raise TableError("row orthogonality fails")
    return CharacterTableModP(
        group=G, classes=cc, p=p, z=z, degrees=degrees, values=values
    )


def lift_to_cyclotomic(t: CharacterTableModP) -> CharacterTable:
    """Recover exact cyclotomic values from the mod-p table.

    For g of order m the value chi(g) is a sum of m-th roots of unity with
    multiplicities in [0, deg chi]; the multiplicity of zeta_m^l is the
    inverse DFT m^-1 sum_j chi(g^j) theta^(-jl) over F_p with
    theta = z^((p-1)/m), and its integer lift is unique.
    """
    cc = t.classes
    p = t.p
    r = t.nclasses
    cyclo_rows = []
    for i in range(r):
        row = []
        for k in range(r):
            m = cc.rep_orders[k]
            theta = pow(t.z, (p - 1) // m, p)
            theta_inv = pow(theta, -1, p)
            minv = pow(m, -1, p)
            mult = []
            for l in range(m):
                acc = 0
                for j in range(m):
                    chi_gj = t.values[i][cc.power_map[k][j % cc.exponent]]
                    acc = (acc + chi_gj * pow(theta_inv, (j * l) % (p - 1), p)) % p
                mu = (acc * minv) % p
                if mu > t.degrees[i]:
                    raise TableError("cyclotomic multiplicity out of range")
                if mu:
                    mult.append((l, mu))
            check = sum(mu * pow(theta, l, p) for l, mu in mult) % p
            if check != t.values[i][k]:
                raise TableError("cyclotomic lift does not reduce to the table")
            row.append(CycloValue(order=m, mult=tuple(mult)))
        cyclo_rows.append(tuple(row))
    table = CharacterTable(modp=t, cyclo=tuple(cyclo_rows), exponent=cc.exponent)
    for i in range(r):
        ident = table.cyclo[i][0]
        if ident.mult != ((0, t.degrees[i]),):
            raise TableError("value at the identity is not the degree")
    return table


def fs_indicator(t: CharacterTableModP, i: int) -> int:
    """Second Frobenius-Schur indicator |G|^-1 sum_g chi_i(g^2) in {-1, 0, +1}."""
    cc = t.classes
    p = t.p
    total = 0
    for k in range(t.nclasses):
        sq = cc.power_map[k][2 % cc.exponent] if cc.exponent > 1 else 0
        total = (total + cc.sizes[k] * t.values[i][sq]) % p
    s = (total * pow(t.group.order % p, -1, p)) % p
    if s == 1 % p:
        return 1
    if s == 0:
        return 0
    if s == p - 1:
        return -1
    raise TableError(f"indicator {s} is not 0 or +-1 mod {p}")


def fs_vector(t: CharacterTableModP) -> tuple[int, ...]:
    return tuple(fs_indicator(t, i) for i in range(t.nclasses))


def dual_involution(t: CharacterTableModP) -> tuple[int, ...]:
    """The permutation i -> i* with chi_{i*}(g) = chi_i(g^-1)."""
    cc = t.classes
    r = t.nclasses
    index = {t.values[i]: i for i in range(r)}
    dual = []
    for i in range(r):
        conj = tuple(t.values[i][cc.inverse_class[k]] for k in range(r))
        j = index.get(conj)
        if j is None:
            raise TableError("conjugate character missing from the table")
        dual.append(j)
    for i in range(r):
        if dual[dual[i]] != i:
            raise TableError("duality is not an involution")
    return tuple(dual)


def self_dual_count(t: CharacterTableModP) -> int:
    dual = dual_involution(t)
    return sum(1 for i, j in enumerate(dual) if i == j)


def fusion_coefficients(t: CharacterTableModP) -> list[list[list[int]]]:
    """Tensor product multiplicities N[i][j][k] of the irreducibles.

    N[i][j][k] = |G|^-1 sum_l |C_l| chi_i chi_j (g_l) chi_k(g_l^-1), computed
    mod p and lifted to the unique integer in [0, p/2).
    """
    cc = t.classes
    p = t.p
    r = t.nclasses
    n_inv = pow(t.group.order % p, -1, p)
    conj_rows = [
        [t.values[k][cc.inverse_class[l]] for l in range(r)] for k in range(r)
    ]
    N = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        for j in range(r):
            prod = [(cc.sizes[l] * t.values[i][l] * t.values[j][l]) % p for l in range(r)]
            for k in range(r):
                ck = conj_rows[k]
                tot = 0
                for l in range(r):
                    tot += prod[l] * ck[l]
                val = (tot * n_inv) % p
                if val >= (p + 1) // 2:
                    raise TableError("fusion coefficient lift out of range")
                N[i][j][k] = val
    return N
