import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schurdim.blocks import linked
from schurdim.characters import (
    FormalCharacter,
    NegativeMultiplicity,
    NonDominantResidue,
    decompose_good,
    decompose_simples,
    frobenius_twist,
    hw_of,
    nabla_p_character,
    recompose,
    simple_character,
    tensor,
    weyl_character,
    weyl_dimension,
)
from schurdim.weights import weight


def char(n, d):
    return FormalCharacter.from_dict(n, d)


def test_weyl_character_examples():
    assert weyl_character(weight(2)).as_dict() == {weight(2): 1, weight(0): 1, weight(-2): 1}
    assert weyl_character(weight(1, 0)).as_dict() == {
        weight(1, 0): 1, weight(-1, 1): 1, weight(0, -1): 1,
    }
    adj = weyl_character(weight(1, 1))
    assert adj.mass() == 8 and adj[weight(0, 0)] == 2


def test_weyl_dimension_examples():
    assert weyl_dimension(weight(3)) == 4
    assert weyl_dimension(weight(1, 1)) == 8
    assert weyl_dimension(weight(3, 2)) == 42


def test_weyl_character_matches_kostka_numbers():
    # multiplicity of the zero weight in nabla(k,k) is k+1
    for k in range(8):
        assert weyl_character(weight(k, k))[weight(0, 0)] == k + 1
    # nabla(3,0) = S^3 V: every weight with multiplicity one
    assert set(weyl_character(weight(3, 0)).as_dict().values()) == {1}


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        weyl_character(weight(-1, 2))
    with pytest.raises(ValueError):
        simple_character(weight(-1), 3)


def test_frobenius_twist_examples():
    assert frobenius_twist(char(2, {1: 1, -1: 1}), 3) == char(2, {3: 1, -3: 1})
    origin = char(3, {(0, 0): 5})
    assert frobenius_twist(origin, 7) == origin
    assert frobenius_twist(weyl_character(weight(1, 0)), 2) == char(
        3, {(2, 0): 1, (-2, 2): 1, (0, -2): 1}
    )
    with pytest.raises(ValueError):
        frobenius_twist(origin, 1)


def test_tensor_examples():
    v = weyl_character(weight(1))
    assert tensor(v, v) == char(2, {2: 1, 0: 2, -2: 1})
    prod = weyl_character(weight(1, 0)) * weyl_character(weight(0, 1))
    assert prod[weight(0, 0)] == 3 and prod.mass() == 9
    assert tensor(weyl_character(weight(2, 1)), FormalCharacter.zero(3)).is_zero()


def test_tensor_overflow_is_detected():
    big = char(2, {0: 2**40})
    with pytest.raises(OverflowError):
        tensor(big, big)


def test_simple_character_examples():
    for p in (3, 5, 7):
        for r in range(p):
            assert simple_character(weight(r), p) == weyl_character(weight(r))
    adj = simple_character(weight(1, 1), 3)
    assert adj == weyl_character(weight(1, 1)) - weyl_character(weight(0, 0))
    assert adj.mass() == 7
    assert simple_character(weight(4), 2) == char(2, {4: 1, -4: 1})


def test_known_simple_dimensions():
    # dim St = p^3; S^2 V stays simple for odd p and is V^F for p = 2;
    # the adjoint module drops its trivial factor only at p = 3
    for p in (2, 3, 5, 7):
        assert simple_character(weight(p - 1, p - 1), p).mass() == p**3
    assert simple_character(weight(2, 0), 3).mass() == 6
    assert simple_character(weight(1, 1), 5).mass() == 8
    assert simple_character(weight(1, 1), 2).mass() == 8
    assert simple_character(weight(2, 0), 2).mass() == 3


def test_nabla_p_examples():
    assert nabla_p_character(weight(4), 2) == char(2, {4: 1, 0: 1, -4: 1})
    for lam in (weight(1, 1), weight(2, 0), weight(4, 3)):
        assert nabla_p_character(lam, 5) == simple_character(lam, 5)
    expected = frobenius_twist(weyl_character(weight(1, 0)), 3) * simple_character(weight(2, 2), 3)
    assert nabla_p_character(weight(5, 2), 3) == expected


def test_decompose_good_examples():
    lam = weight(3, 4)
    assert decompose_good(weyl_character(lam)) == {lam: 1}
    v = weyl_character(weight(1, 0))
    assert decompose_good(v * v) == {weight(2, 0): 1, weight(0, 1): 1}


def test_decompose_simples_examples():
    for r in range(5):
        assert decompose_simples(weyl_character(weight(r)), 5) == {weight(r): 1}
    assert decompose_simples(weyl_character(weight(1, 1)), 3) == {weight(1, 1): 1, weight(0, 0): 1}
    assert decompose_simples(weyl_character(weight(3)), 3) == {weight(3): 1, weight(1): 1}


def test_decomposition_errors():
    with pytest.raises(NegativeMultiplicity):
        decompose_good(weyl_character(weight(0, 0)) - weyl_character(weight(1, 1)))
    mults = decompose_good(
        weyl_character(weight(0, 0)) - weyl_character(weight(1, 1)), allow_negative=True
    )
    assert mults == {weight(1, 1): -1, weight(0, 0): 1}
    with pytest.raises(NonDominantResidue):
        decompose_good(char(3, {(1, -1): 1}))
    for e in (NegativeMultiplicity, NonDominantResidue):
        assert issubclass(e, ValueError)


def test_hw_of_examples():
    assert hw_of([weight(0, 0)]) == {weight(0, 0)}
    assert hw_of([weight(2, 0), weight(0, 1)]) == {weight(2, 0)}
    # (0,2) - (1,0) is the simple root (-1,2), so this pair is comparable
    assert hw_of([weight(1, 0), weight(0, 2)]) == {weight(0, 2)}
    assert hw_of([weight(1, 0), weight(0, 1)]) == {weight(1, 0), weight(0, 1)}
    assert hw_of([]) == set()


def test_canonical_json_order():
    assert weyl_character(weight(1, 0)).to_json() == [[1, 0, 1], [-1, 1, 1], [0, -1, 1]]
    assert char(2, {3: 0, 1: 2}).to_json() == [[1, 2]]


def test_equality_is_canonical():
    a = char(3, {(0, 0): 1, (5, 5): 1}) - char(3, {(5, 5): 1})
    assert a == char(3, {(0, 0): 1})
    assert a.offset == (0, 0) and a.data.shape == (1, 1)


def test_weyl_invariance_and_mass():
    for a in range(9):
        for b in range(9):
            c = weyl_character(weight(a, b))
            assert c.is_weyl_invariant()
            assert c.mass() == weyl_dimension(weight(a, b))
            assert c[weight(a, b)] == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_simple_bounded_by_nabla(p):
    for a in range(9):
        for b in range(9):
            lam = weight(a, b)
            L = simple_character(lam, p)
            assert L[lam] == 1
            assert L.is_weyl_invariant()
            assert L.pointwise_leq(weyl_character(lam))
            mults = decompose_simples(weyl_character(lam), p)
            assert min(mults.values()) > 0
            assert recompose(mults, lambda w: simple_character(w, p), 3) == weyl_character(lam)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_tensor_of_costandards_has_good_filtration(a, b, c, d):
    prod = weyl_character(weight(a, b)) * weyl_character(weight(c, d))
    mults = decompose_good(prod)
    assert min(mults.values()) > 0
    assert sum(m * weyl_dimension(w) for w, m in mults.items()) == prod.mass()
    assert prod == weyl_character(weight(c, d)) * weyl_character(weight(a, b))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.sampled_from([2, 3, 5]))
def test_twist_is_multiplicative(a, b, c, m):
    x, y = weyl_character(weight(a, b)), weyl_character(weight(c, 1))
    assert frobenius_twist(x * y, m) == frobenius_twist(x, m) * frobenius_twist(y, m)
    assert frobenius_twist(x, m).mass() == x.mass()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_steinberg_summand_of_its_square(p):
    stw = weight(p - 1, p - 1)
    stc = simple_character(stw, p)
    assert stc == weyl_character(stw)
    mults = decompose_good(stc * stc)
    assert mults[stw] >= 1
    assert all(not linked(w, stw, p) for w in mults if w != stw)


def test_dense_grid_is_int64():
    c = weyl_character(weight(4, 4))
    assert c.data.dtype == np.int64
    assert c.nnz() == len(c.items())
