import random
from itertools import permutations

import pytest

from level2mcg.gf2 import Subspace, kernel, subspace_ops
from level2mcg.tensor import (
    GenusMismatch,
    HClass,
    Tensor,
    c_map,
    cube,
    even_sym3_dim_formula,
    f_map,
    flat_index,
    invariant_bases,
    multi_index,
    omega,
    permute_factors,
    s2,
    s3,
    sym2_dim_formula,
    sym3_dim_formula,
    sym3_spanning,
    c_classes,
    tensor,
)

from oracles import index3, invariant_basis, invariant_dim

# Fixed-point dimensions of S_n on H^{(x)n}, frozen from oracles.invariant_dim.
ORACLE_SYM2 = {2: 3, 3: 6, 4: 10, 5: 15}
ORACLE_SYM3 = {2: 4, 3: 10, 4: 20, 5: 35}


def C(g, i):
    return HClass.basis(g, i)


def T(g, *monos):
    return Tensor.from_monomials(g, monos, len(monos[0]))


def test_index_convention_matches_oracle():
    g = 5
    for i, j, k in [(1, 1, 1), (2, 3, 4), (5, 5, 5), (5, 1, 3)]:
        assert flat_index(g, (i, j, k)) == index3(g, i, j, k)
        assert multi_index(g, 3, index3(g, i, j, k)) == (i, j, k)


def test_omega_examples():
    assert omega(1) == T(1, (1, 1))
    assert omega(2) == T(2, (1, 1), (2, 2))
    w = omega(4)
    assert w.coords.weight() == 4
    assert w.monomials() == [(i, i) for i in range(1, 5)]
    with pytest.raises(ValueError):
        omega(0)


def test_s2_s3_examples():
    g = 3
    x = HClass.of(g, 1, 3)
    assert s2(x, x) == cube(x)
    assert s2(C(g, 1), C(g, 2)) == T(g, (1, 1, 2), (1, 2, 1), (2, 1, 1))
    assert s3(C(g, 1), C(g, 2), C(g, 3)) == T(g, *permutations((1, 2, 3)))
    with pytest.raises(GenusMismatch):
        s2(C(3, 1), C(4, 1))


def test_cube_examples():
    g = 3
    assert cube(C(g, 1)) == T(g, (1, 1, 1))
    c1, c2, c3 = C(g, 1), C(g, 2), C(g, 3)
    assert cube(c1 + c2) == cube(c1) + cube(c2) + s2(c1, c2) + s2(c2, c1)
    expansion = cube(c1) + cube(c2) + cube(c3)
    for x, y in permutations((c1, c2, c3), 2):
        expansion = expansion + s2(x, y)
    expansion = expansion + s3(c1, c2, c3)
    assert cube(c1 + c2 + c3) == expansion


def test_c_map_examples():
    g = 4
    for i in range(1, g + 1):
        assert c_map(cube(C(g, i))) == tensor(C(g, i), C(g, i))
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if i != j:
                ci, cj = C(g, i), C(g, j)
                assert c_map(s2(ci, cj)) == tensor(ci, cj) + tensor(cj, ci) + tensor(ci, ci)
    assert not c_map(tensor(C(g, 1) + C(g, 2), C(g, 3), C(g, 4)))


def test_f_map_examples():
    g = 4
    assert not f_map(s3(C(g, 1), C(g, 2), C(g, 3)))
    w = omega(g)
    for i in range(1, g + 1):
        lhs = f_map(Tensor(g, 3, w.bits << ((i - 1) * g * g)))  # C_i (x) omega
        rhs = w
        for j in range(1, g + 1):
            rhs = rhs + tensor(C(g, j), C(g, i))
        assert lhs == rhs
    assert f_map(tensor(C(g, 1), C(g, 2), C(g, 3))) == T(g, (2, 3), (3, 1))


def test_invariant_bases_examples():
    b4 = invariant_bases(4)
    assert (b4.sym3.dim, b4.sym2.dim, b4.even_sym3.dim, b4.h_omega.dim) == (20, 10, 10, 4)
    assert invariant_bases(3).even_sym3.dim == 4
    assert invariant_bases(2).sym2.dim == 3
    with pytest.raises(ValueError):
        invariant_bases(1)


def test_str_rendering():
    g = 2
    assert str(s2(C(g, 1), C(g, 2))) == "C1.C1.C2 + C1.C2.C1 + C2.C1.C1"
    assert str(Tensor(g, 3)) == "0"


# -- against the fixed-point oracle ------------------------------------------------


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_invariant_dims_match_oracle(g):
    b = invariant_bases(g)
    assert b.sym2.dim == ORACLE_SYM2[g] == sym2_dim_formula(g)
    assert b.sym3.dim == ORACLE_SYM3[g] == sym3_dim_formula(g)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_sym3_equals_oracle_fixed_points(g):
    assert invariant_dim(g, 3) == ORACLE_SYM3[g]
    rows = invariant_basis(g, 3)
    packed = [sum(1 << k for k, b in enumerate(r) if b) for r in rows]
    assert Subspace.span(packed, g**3) == invariant_bases(g).sym3


# -- properties ---------------------------------------------------------------------


@pytest.mark.parametrize("g", [2, 3, 5])
def test_sym3_spanning_vectors_are_fixed(g):
    for t in sym3_spanning(c_classes(g)):
        for p in permutations(range(3)):
            assert permute_factors(t, p) == t


@pytest.mark.parametrize("g", range(3, 13))
def test_dimension_identities(g):
    b = invariant_bases(g)
    assert b.sym3.dim == sym3_dim_formula(g)
    assert b.sym2.dim == sym2_dim_formula(g)
    assert b.even_sym3.dim == even_sym3_dim_formula(g)
    assert b.h_omega.dim == g
    assert b.sym3.dim - b.sym2.dim == b.even_sym3.dim


@pytest.mark.parametrize("g", range(3, 13))
def test_c_map_exact_on_sym3(g):
    b = invariant_bases(g)
    n = g**3
    images = Subspace.span((c_map(Tensor(g, 3, v)).bits for v in b.sym3.basis), g * g)
    assert images == b.sym2
    pairs = [(v, c_map(Tensor(g, 3, v)).bits) for v in b.sym3.basis]
    assert kernel(pairs, n, g * g) == b.even_sym3


@pytest.mark.parametrize("g", range(2, 13))
def test_h_omega_meets_sym3_trivially(g):
    b = invariant_bases(g)
    assert subspace_ops(b.h_omega, b.sym3).intersection.dim == 0
    assert all(not f_map(Tensor(g, 3, v)) for v in b.sym3.basis)
    images = Subspace.span((f_map(Tensor(g, 3, v)).bits for v in b.h_omega.basis), g * g)
    assert images.dim == b.h_omega.dim


@pytest.mark.parametrize("g", [2, 3, 5, 8])
def test_cube_polarization(g):
    rng = random.Random(g)
    for _ in range(100):
        x = HClass(g, rng.randrange(1 << g))
        y = HClass(g, rng.randrange(1 << g))
        assert cube(x + y) + cube(x) + cube(y) == s2(x, y) + s2(y, x)
