import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weinkit.graded import (
    ChainComplex,
    GradedGroup,
    cancel_summand,
    cohomology_from_homology,
    euler_characteristic,
    homology,
    homology_from_cohomology,
    invariant_factor_chain,
    semi_characteristic,
)

from oracles import homology_ranks_by_row_reduction


def gg(d):
    return GradedGroup.from_dict(d)


class TestCanonicalForm:
    def test_merge_coprime(self):
        assert gg({0: (0, [2, 3])}) == gg({0: (0, [6])})

    def test_chain_ordering(self):
        assert gg({0: (0, [4, 2])}).torsion(0) == (2, 4)

    def test_drop_trivial(self):
        assert gg({0: (0, [1, 1])}) == GradedGroup.zero()
        assert gg({0: (0, [])}) == gg({1: (0, [1])})

    def test_mixed(self):
        # Z/2 + Z/4 + Z/3 = Z/2 + Z/12
        assert gg({0: (0, [2, 4, 3])}).torsion(0) == (2, 12)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            gg({0: (-1, [])})
        with pytest.raises(ValueError):
            invariant_factor_chain([0])


class TestHomology:
    def test_sphere_complex(self):
        for n in (2, 3, 7):
            c = ChainComplex({0: 1, n: 1})
            assert homology(c) == gg({0: (1, []), n: (1, [])})

    def test_degree_two_attaching(self):
        c = ChainComplex({0: 1, 1: 1}, {1: [[2]]})
        h = homology(c)
        assert h.torsion(0) == (2,)
        assert h.rank(0) == 0
        assert h.rank(1) == 0

    def test_wedge_thickening_complex(self):
        for i in (1, 4, 10):
            c = ChainComplex({0: 1, 2: i, 3: i})
            assert homology(c) == gg({0: (1, []), 2: (i, []), 3: (i, [])})

    def test_rejects_non_complex(self):
        with pytest.raises(ValueError):
            ChainComplex({0: 1, 1: 1, 2: 1}, {1: [[1]], 2: [[1]]})

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            ChainComplex({0: 1, 1: 2}, {1: [[1]]})

    def test_projective_plane_like(self):
        # one cell each in degrees 0,1,2 with d2 = [2], d1 = 0
        c = ChainComplex({0: 1, 1: 1, 2: 1}, {2: [[2]]})
        h = homology(c)
        assert h == gg({0: (1, []), 1: (0, [2])})


complex_strategy = st.integers(min_value=1, max_value=4).flatmap(
    lambda top: st.tuples(
        st.lists(st.integers(min_value=0, max_value=5),
                 min_size=top + 1, max_size=top + 1),
        st.randoms(use_true_random=False)))


def random_complex(dims, rng):
    """Build a valid complex: random d_top, then d_{k} = 0 unless compatible.

    To keep dd = 0 while staying random, alternate degrees get random
    matrices and the ones between are zero.
    """
    boundaries = {}
    for k in range(1, len(dims), 2):
        rows, cols = dims[k - 1], dims[k]
        if rows and cols:
            boundaries[k] = [[rng.randint(-4, 4) for _ in range(cols)]
                             for _ in range(rows)]
    cdims = {k: n for k, n in enumerate(dims)}
    return ChainComplex(cdims, boundaries)


@settings(max_examples=80, deadline=None)
@given(complex_strategy)
def test_betti_matches_row_reduction_oracle(args):
    dims, rng = args
    c = random_complex(dims, rng)
    h = homology(c)
    oracle = homology_ranks_by_row_reduction(
        {k: c.dim(k) for k in range(len(dims))},
        {k: m for k, m in c.boundaries.items()})
    for k in range(len(dims)):
        assert h.rank(k) == oracle.get(k, 0)


@settings(max_examples=80, deadline=None)
@given(complex_strategy)
def test_euler_characteristic_descends_to_homology(args):
    dims, rng = args
    c = random_complex(dims, rng)
    assert c.euler_characteristic() == euler_characteristic(homology(c))


class TestCancelSummand:
    def test_equal_inputs_free_summand(self):
        apc = gg({0: (2, [2])})
        a, b, iso = cancel_summand(apc, apc, gg({0: (1, [])}))
        assert a == b == gg({0: (1, [2])})
        assert iso

    def test_detects_non_isomorphic_complements(self):
        a, b, iso = cancel_summand(gg({0: (3, [])}), gg({0: (2, [3])}),
                                   gg({0: (2, [])}))
        assert a == gg({0: (1, [])})
        assert b == gg({0: (0, [3])})
        assert not iso

    def test_torsion_summand(self):
        apc = gg({0: (1, [4, 2])})
        a, b, iso = cancel_summand(apc, apc, gg({0: (0, [2])}))
        assert iso
        assert a == gg({0: (1, [4])})

    def test_rejects_non_summand(self):
        with pytest.raises(ValueError):
            cancel_summand(gg({0: (0, [4])}), gg({0: (0, [4])}),
                           gg({0: (0, [2])}))
        with pytest.raises(ValueError):
            cancel_summand(gg({0: (1, [])}), gg({0: (1, [])}),
                           gg({0: (2, [])}))


graded_strategy = st.dictionaries(
    st.integers(min_value=0, max_value=5),
    st.tuples(st.integers(min_value=0, max_value=3),
              st.lists(st.integers(min_value=2, max_value=12), max_size=3)),
    max_size=4).map(GradedGroup.from_dict)


@settings(max_examples=120, deadline=None)
@given(graded_strategy, graded_strategy)
def test_cancel_summand_isomorphic_inputs(a, c):
    apc = a.direct_sum(c)
    left, right, iso = cancel_summand(apc, apc, c)
    assert iso
    assert left == right == a


@settings(max_examples=100, deadline=None)
@given(graded_strategy)
def test_universal_coefficients_roundtrip(h):
    assert homology_from_cohomology(cohomology_from_homology(h)) == h


def test_universal_coefficients_shifts_torsion():
    h = gg({0: (1, []), 1: (0, [2]), 2: (1, [])})
    hstar = cohomology_from_homology(h)
    assert hstar.torsion(2) == (2,)
    assert hstar.torsion(1) == ()
    assert hstar.rank(0) == 1 and hstar.rank(2) == 1


class TestCharacteristics:
    def test_even_sphere(self):
        assert euler_characteristic(gg({0: (1, []), 4: (1, [])})) == 2

    def test_point(self):
        pt = gg({0: (1, [])})
        assert euler_characteristic(pt) == 1
        assert semi_characteristic(pt, 1) == 1
        assert semi_characteristic(pt, 5) == 1

    def test_semi_characteristic_rejects_even(self):
        with pytest.raises(ValueError):
            semi_characteristic(gg({0: (1, [])}), 4)

    def test_wedge_boundary_parity(self):
        # closed 5-manifold with H_0 = Z, H_2 = Z^i, H_3 = Z^i, H_5 = Z
        for i in range(1, 11):
            h = gg({0: (1, []), 2: (i, []), 3: (i, []), 5: (1, [])})
            assert semi_characteristic(h, 5) == (1 + i) % 2

    def test_f2_dimensions_lift_torsion(self):
        # RP^2: H_0 = Z, H_1 = Z/2; over F2 dims are 1,1,1
        h = gg({0: (1, []), 1: (0, [2])})
        assert [h.dim(k, "F2") for k in range(3)] == [1, 1, 1]
        assert [h.dim(k, "Q") for k in range(3)] == [1, 0, 0]


def test_json_roundtrips():
    h = gg({0: (1, []), 3: (2, [2, 4])})
    assert GradedGroup.from_json(h.to_json()) == h
    c = ChainComplex({0: 1, 1: 2, 2: 1}, {2: [[3], [0]]})
    c2 = ChainComplex.from_json(c.to_json())
    assert c2.dims == c.dims and c2.boundaries == c.boundaries


def test_direct_sum_of_complexes_adds_homology():
    a = ChainComplex({0: 1, 1: 1}, {1: [[2]]})
    b = ChainComplex({0: 1, 2: 3})
    h = homology(a.direct_sum(b))
    assert h == homology(a).direct_sum(homology(b))
