import random
from itertools import permutations
from math import comb

import pytest

from koszul_lab.exterior import (
    KoszulChain,
    alpha_map,
    boundary,
    decompose,
    formal_boundary,
    gamma_map,
    index_chain,
    merge_indices,
    sign,
    sort_bracket,
    wedge,
)
from koszul_lab.harness import random_monomial_ideal
from koszul_lab.homology import KoszulComplex
from koszul_lab.rings import MonomialIdeal, RingConfig, power_ideal


def test_sign_small_cases():
    assert sign((1,), (2,)) == 1
    assert sign((2,), (1,)) == -1
    assert sign((2, 4), (1, 3)) == -1  # pairs (2,1), (4,1), (4,3)
    assert sign((), (1, 2)) == 1
    with pytest.raises(ValueError):
        sign((1, 2), (2, 3))


def test_sign_consistent_with_sort_bracket():
    # sigma(A, B) equals the parity of sorting the concatenation A + B
    rng = random.Random(11)
    for _ in range(100):
        pool = rng.sample(range(1, 10), rng.randint(2, 6))
        cut = rng.randint(1, len(pool) - 1)
        A = tuple(sorted(pool[:cut]))
        B = tuple(sorted(pool[cut:]))
        s, T = sort_bracket(A + B)
        assert T == tuple(sorted(pool))
        assert s == sign(A, B)


def test_sort_bracket_parity_and_repeats():
    for perm in permutations((3, 1, 2)):
        s, T = sort_bracket(perm)
        assert T == (1, 2, 3)
        inv = sum(
            1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b]
        )
        assert s == (-1) ** inv
    assert sort_bracket((1, 2, 1)) is None


def test_merge_indices():
    s, T = merge_indices((3,), (1, 2))
    assert T == (1, 2, 3) and s == 1


def _random_chain(rng, ideal, t):
    kz = KoszulComplex(ideal)
    T = tuple(sorted(rng.sample(range(1, ideal.r + 1), t)))
    alpha = [0] * ideal.ring.d
    for i in T:
        g = ideal.ring.mdeg(ideal.gens[i - 1])
        alpha = [a + b for a, b in zip(alpha, g)]
    extra = [0] * ideal.ring.n
    for _ in range(rng.randint(0, 2)):
        extra[rng.randrange(ideal.ring.n)] += 1
    alpha = tuple(a + b for a, b in zip(alpha, ideal.ring.mdeg(tuple(extra))))
    terms = {}
    for key in kz.basis(t, alpha):
        c = rng.randint(-3, 3)
        if c and rng.random() < 0.6:
            terms[key] = c
    return KoszulChain(ideal, t, terms)


def _corpus(rng, count=40):
    out = []
    while len(out) < count:
        n = rng.choice([2, 3])
        I = random_monomial_ideal(rng, RingConfig((n,)), max_deg=3, max_gens=6)
        if I.r >= 2:
            out.append(I)
    return out


def test_boundary_squares_to_zero():
    rng = random.Random(21)
    for I in _corpus(rng):
        t = rng.randint(2, min(3, I.r))
        f = _random_chain(rng, I, t)
        assert boundary(boundary(f)).is_zero()


def test_leibniz_rule():
    rng = random.Random(22)
    for I in _corpus(rng):
        s = rng.randint(1, min(2, I.r - 1))
        t = rng.randint(1, min(2, I.r - s))
        a = _random_chain(rng, I, s)
        f = _random_chain(rng, I, t)
        lhs = boundary(wedge(a, f))
        rhs = wedge(boundary(a), f) + wedge(a, boundary(f)).scale((-1) ** s)
        assert lhs == rhs


def test_decompose_reconstructs():
    rng = random.Random(23)
    for I in _corpus(rng):
        t = rng.randint(1, min(3, I.r))
        f = _random_chain(rng, I, t)
        s = rng.randint(1, t)
        J = tuple(sorted(rng.sample(range(1, I.r + 1), s)))
        a, b = decompose(f, J)
        assert f == a + wedge(index_chain(I, J), b)
        for (T, _w) in a.terms:
            assert not set(J) <= set(T)
        for (T, _w) in b.terms:
            assert not set(J) & set(T)


def test_gamma_chain_map_identities():
    rng = random.Random(24)
    for I in _corpus(rng):
        t = rng.randint(2, min(3, I.r))
        f = _random_chain(rng, I, t)
        s = rng.randint(0, t - 1)
        gb = gamma_map(boundary(f), s)
        outer = formal_boundary(gamma_map(f, s + 1), I)
        inner = {
            T: boundary(b).scale((-1) ** s) for T, b in gamma_map(f, s).items()
        }
        for target in (outer, inner):
            keys = set(target) | set(gb)
            for T in keys:
                zero = KoszulChain.zero(I, f.t - 1 - s)
                assert target.get(T, zero) == gb.get(T, zero)


def test_alpha_gamma_binomial():
    rng = random.Random(25)
    for I in _corpus(rng):
        t = rng.randint(1, min(3, I.r))
        f = _random_chain(rng, I, t)
        s = rng.randint(0, t)
        assert alpha_map(gamma_map(f, s), I, t) == f.scale(comb(t, s))


def test_chain_arithmetic_and_degrees():
    ring = RingConfig((2,))
    I = power_ideal(ring, 2)
    f = KoszulChain.basis_element(I, (1,), (0, 1))
    g = KoszulChain.basis_element(I, (2,), (1, 0))
    h = f + g
    assert h.multidegree() == (3,)
    assert (h - h).is_zero()
    assert h.scale(0).is_zero()
    assert f.scale_monomial((1, 1)).multidegree() == (5,)
    mixed = f + KoszulChain.basis_element(I, (1,), (1, 1))
    assert not mixed.is_homogeneous()
    with pytest.raises(ValueError):
        mixed.multidegree()


def test_chain_validation():
    ring = RingConfig((2,))
    I = power_ideal(ring, 2)
    with pytest.raises(ValueError):
        KoszulChain(I, 1, {((5,), (0, 0)): 1})
    with pytest.raises(ValueError):
        KoszulChain(I, 2, {((1,), (0, 0)): 1})


def test_render_stable():
    ring = RingConfig((2,))
    I = power_ideal(ring, 2)
    z = KoszulChain(I, 1, {((3,), (1, 0)): 1, ((2,), (0, 1)): -1})
    assert z.render() == "-1 * [x1*x2] * x2 + 1 * [x2^2] * x1"
    assert KoszulChain.zero(I, 1).render() == "0"
