import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wittlab import chartab, groups
from wittlab.chartab import (
    burnside_dixon,
    charpoly_modp,
    class_mult_coeffs,
    dixon_prime,
    dual_involution,
    fs_indicator,
    fs_vector,
    fusion_coefficients,
    lift_to_cyclotomic,
    poly_roots_modp,
    self_dual_count,
)
from wittlab.groups import abelian_group, conjugacy_classes, cyclic

# the classical 5x5 character table of the dihedral group of order 8, used as
# an independent oracle: rows chi1..chi5, columns 1, r^2, r, s, rs
D8_TABLE = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [1, 1, -1, 1, -1],
    [1, 1, -1, -1, 1],
    [2, -2, 0, 0, 0],
]
D8_SIZES = [1, 1, 2, 2, 2]


def brute_charpoly(M, p):
    """Characteristic polynomial by determinant interpolation (oracle)."""
    m = len(M)
    pts = list(range(m + 1))
    vals = []
    for x in pts:
        A = [[((x if i == j else 0) - M[i][j]) % p for j in range(m)] for i in range(m)]
        det = 1
        for col in range(m):
            piv = next((r for r in range(col, m) if A[r][col]), None)
            if piv is None:
                det = 0
                break
            if piv != col:
                A[col], A[piv] = A[piv], A[col]
                det = -det
            det = det * A[col][col] % p
            inv = pow(A[col][col], -1, p)
            for r in range(col + 1, m):
                c = A[r][col] * inv % p
                A[r] = [(a - c * b) % p for a, b in zip(A[r], A[col])]
        vals.append(det % p)
    coeffs = [0] * (m + 1)
    for i, xi in enumerate(pts):
        num = [1]
        den = 1
        for j, xj in enumerate(pts):
            if i == j:
                continue
            num = [(a - xj * b) % p for a, b in zip([0] + num, num + [0])]
            den = den * (xi - xj) % p
        c = vals[i] * pow(den, -1, p) % p
        for k, nk in enumerate(num):
            coeffs[k] = (coeffs[k] + c * nk) % p
    return coeffs


@given(st.integers(1, 6), st.data())
@settings(max_examples=40, deadline=None)
def test_charpoly_matches_determinant_oracle(m, data):
    p = 101
    M = [[data.draw(st.integers(0, p - 1)) for _ in range(m)] for _ in range(m)]
    assert charpoly_modp(M, p) == brute_charpoly(M, p)


def test_poly_roots():
    # x^2 - 1 over F_7
    assert poly_roots_modp([6, 0, 1], 7) == [1, 6]


def test_dixon_prime_conditions():
    for n, e in ((8, 4), (16, 8), (64, 4), (1, 1)):
        p = dixon_prime(n, e)
        assert p > 2 * n and (p - 1) % e == 0


def test_class_mult_identity_row(corpus_groups):
    G = corpus_groups["d8"]
    cc = conjugacy_classes(G)
    a = class_mult_coeffs(G, cc)
    r = len(cc.reps)
    for j in range(r):
        for k in range(r):
            assert a[0][j][k] == (1 if j == k else 0)


def test_class_mult_total_count(corpus_groups):
    G = corpus_groups["q8"]
    cc = conjugacy_classes(G)
    a = class_mult_coeffs(G, cc)
    r = len(cc.reps)
    for i in range(r):
        for j in range(r):
            assert sum(a[i][j][k] * cc.sizes[k] for k in range(r)) == cc.sizes[i] * cc.sizes[j]


def test_class_mult_z2():
    G = cyclic(2)
    cc = conjugacy_classes(G)
    a = class_mult_coeffs(G, cc)
    assert a[1][1][0] == 1


def test_class_mult_representative_independent(corpus_groups):
    # recount against one alternate representative per class
    G = corpus_groups["d16"]
    cc = conjugacy_classes(G)
    a = class_mult_coeffs(G, cc)
    members = {}
    for x in range(G.order):
        members.setdefault(cc.class_of[x], []).append(x)
    for k, mem in members.items():
        z = mem[-1]  # not necessarily the canonical representative
        for i in range(len(cc.reps)):
            for j in range(len(cc.reps)):
                count = sum(
                    1 for x in members[i] if cc.class_of[G.cayley[G.inverse[x]][z]] == j
                )
                assert count == a[i][j][k]


def test_degrees(corpus_groups, tables):
    assert burnside_dixon(cyclic(2)).degrees == (1, 1)
    assert tables("d8").degrees == (1, 1, 1, 1, 2)
    assert tables("q8").degrees == (1, 1, 1, 1, 2)


def test_table_invariants_on_corpus(corpus_groups, tables):
    for name in ("d8", "q8", "d16", "g3_16", "z4x4", "smallgroup_32_34"):
        t = tables(name)
        n = corpus_groups[name].order
        r = t.nclasses
        assert sum(d * d for d in t.degrees) == n
        assert all(n % d == 0 for d in t.degrees)
        cc = t.classes
        p = t.p
        # column orthogonality: sum_i chi_i(k) chi_i(l^-1) = delta_kl |G|/|C_k|
        for k in range(r):
            for l in range(r):
                tot = sum(
                    t.values[i][k] * t.values[i][cc.inverse_class[l]] for i in range(r)
                ) % p
                expect = (n // cc.sizes[k]) % p if k == l else 0
                assert tot == expect


def test_fs_examples(tables):
    assert fs_vector(tables("d8")) == (1, 1, 1, 1, 1)
    assert fs_vector(tables("q8")) == (1, 1, 1, 1, -1)
    t3 = burnside_dixon(cyclic(3))
    assert sorted(fs_vector(t3)) == [0, 0, 1]


def test_fs_zero_iff_not_self_dual(tables):
    for name in ("q8", "g3_16", "smallgroup_32_6"):
        t = tables(name)
        dual = dual_involution(t)
        for i in range(t.nclasses):
            assert (fs_indicator(t, i) == 0) == (dual[i] != i)


def test_fs_brute_force_oracle(corpus_groups, tables):
    """Indicator equals the complex sum over squares, from lifted values."""
    for name, G in corpus_groups.items():
        if G.order > 16:
            continue
        t = tables(name)
        lifted = lift_to_cyclotomic(t)
        cc = t.classes
        for i in range(t.nclasses):
            acc = 0j
            for g in range(G.order):
                sq = cc.class_of[G.cayley[g][g]]
                acc += lifted.cyclo[i][sq].to_complex()
            val = acc / G.order
            assert abs(val - fs_indicator(t, i)) < 1e-9


def test_dual_involution_examples(tables):
    assert dual_involution(tables("d8")) == (0, 1, 2, 3, 4)
    t3 = burnside_dixon(cyclic(3))
    assert dual_involution(t3) == (0, 2, 1)
    assert dual_involution(burnside_dixon(cyclic(1))) == (0,)


def test_self_dual_counts(tables):
    assert self_dual_count(tables("smallgroup_32_6")) == 7
    assert self_dual_count(tables("smallgroup_32_7")) == 7


def test_lift_values(tables, corpus_groups):
    t = tables("d16")
    lifted = lift_to_cyclotomic(t)
    # trivial character lifts to all ones
    assert all(cv.mult == ((0, 1),) for cv in lifted.cyclo[0])
    # the degree-2 character values at the class of a are 0, sqrt2, -sqrt2
    G = corpus_groups["d16"]
    ka = t.classes.class_of[G.generators[0]]
    got = sorted(
        round(lifted.cyclo[i][ka].to_complex().real, 6)
        for i in range(t.nclasses)
        if t.degrees[i] == 2
    )
    assert got == [round(-math.sqrt(2), 6), 0.0, round(math.sqrt(2), 6)]
    # sqrt2 as an exact sum of eighth roots of unity
    for i in range(t.nclasses):
        if t.degrees[i] == 2 and lifted.cyclo[i][ka].mult == ((1, 1), (7, 1)):
            break
    else:
        pytest.fail("no character with value zeta8 + zeta8^-1")


def test_lift_z4_faithful():
    t = burnside_dixon(cyclic(4))
    lifted = lift_to_cyclotomic(t)
    k = t.classes.class_of[1]
    faithful = [
        lifted.cyclo[i][k].mult for i in range(4) if lifted.cyclo[i][k].order == 4
    ]
    assert ((1, 1),) in faithful


def test_abelian_table_matches_pairing(corpus_groups, tables):
    """For abelian groups the table rows are exactly the dual pairing rows."""
    for name in ("z4x2", "z3x3"):
        G = corpus_groups[name]
        t = tables(name)
        struct = groups.abelian_invariants(G, range(G.order))
        coords = groups.abelian_coordinates(G, struct)
        dual = groups.characters_of_abelian(struct)
        N = dual.modulus
        zeta = pow(t.z, (t.p - 1) // N, t.p)
        cc = t.classes
        expected_rows = set()
        for chi in dual.characters:
            row = tuple(
                pow(zeta, dual.pairing_exponent(chi, coords[cc.reps[k]]), t.p)
                for k in range(t.nclasses)
            )
            expected_rows.add(row)
        assert set(t.values) == expected_rows
        assert all(d == 1 for d in t.degrees)


def test_fusion_unit_row(tables):
    t = tables("q8")
    N = fusion_coefficients(t)
    for j in range(t.nclasses):
        for k in range(t.nclasses):
            assert N[0][j][k] == (1 if j == k else 0)


def test_fusion_symmetry(tables):
    t = tables("d16")
    N = fusion_coefficients(t)
    r = t.nclasses
    for i in range(r):
        for j in range(r):
            assert N[i][j] == N[j][i]


def test_fusion_d8_squares_to_linear_sum(tables):
    """chi5 (x) chi5 decomposes as the sum of the four linear characters.

    Frozen from the classical table by exact rational arithmetic.
    """
    # oracle: N[4][4][k] = (1/8) sum |C| chi5 chi5 chi_k (real table)
    expect = []
    for k in range(5):
        tot = sum(
            Fraction(D8_SIZES[c] * D8_TABLE[4][c] ** 2 * D8_TABLE[k][c], 8)
            for c in range(5)
        )
        assert tot.denominator == 1
        expect.append(int(tot))
    assert expect == [1, 1, 1, 1, 0]

    t = tables("d8")
    N = fusion_coefficients(t)
    deg2 = next(i for i in range(5) if t.degrees[i] == 2)
    assert N[deg2][deg2] == [1, 1, 1, 1, 0]


def test_fusion_associative_sparse(tables):
    from wittlab import witt

    for name in ("d8", "q16", "z4x4"):
        ring = witt.grothendieck_ring(tables(name))
        assert witt.assert_associative(ring)
