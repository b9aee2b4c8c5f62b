import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from induced_uncertainty import divergences as dv
from induced_uncertainty.distributions import make_distribution, random_majorized_pair, uniform
from induced_uncertainty.exceptions import (
    DimensionMismatchError,
    GeneratorNotNormalizedError,
    NegativeOrderError,
    UncertaintyError,
)

P = [0.75, 0.25]
U2 = [0.5, 0.5]
log2 = math.log2


def random_pair(rng, n, sparse=False):
    p = rng.dirichlet(np.ones(n))
    q = rng.dirichlet(np.ones(n))
    if sparse:
        p[rng.integers(n)] = 0.0
        p /= p.sum()
    return make_distribution(p), make_distribution(q)


# -- KL -------------------------------------------------------------------------

def test_kl_examples():
    assert dv.kl(U2, U2) == 0.0
    assert dv.kl(P, U2) == pytest.approx(0.75 * log2(1.5) + 0.25 * log2(0.5), abs=1e-15)
    assert dv.kl(P, U2) == pytest.approx(0.188722, abs=1e-6)
    assert dv.kl([1, 0], [0, 1]) == math.inf


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        dv.kl([1.0], U2)
    with pytest.raises(DimensionMismatchError):
        dv.hellinger([1.0], U2)


# -- Renyi ---------------------------------------------------------------------

def test_renyi_examples():
    # direct sum 0.75^2/0.5 + 0.25^2/0.5 = 1.25
    assert dv.renyi(2, P, U2) == pytest.approx(log2(1.25), abs=1e-15)
    assert dv.renyi(2, P, U2) == pytest.approx(0.321928, abs=1e-6)
    assert dv.renyi(0.5, P, P) == pytest.approx(0.0, abs=1e-15)
    assert dv.renyi(math.inf, P, U2) == pytest.approx(log2(1.5), abs=1e-15)
    assert dv.renyi(1, P, U2) == dv.kl(P, U2)


def test_renyi_order_zero_is_minus_log_of_q_mass_on_support():
    assert dv.renyi(0, [0.6, 0.4, 0.0], [0.2, 0.3, 0.5]) == pytest.approx(-log2(0.5))


def test_renyi_conventions_on_zeros():
    assert dv.renyi(2, [0.5, 0.5], [1.0, 0.0]) == math.inf
    assert dv.renyi(0.5, [1.0, 0.0], [0.0, 1.0]) == math.inf
    assert dv.renyi(0.5, [0.5, 0.5], [1.0, 0.0]) == pytest.approx(-2 * log2(math.sqrt(0.5)))


def test_renyi_rejects_negative_order():
    with pytest.raises(NegativeOrderError):
        dv.renyi(-0.1, P, U2)
    with pytest.raises(NegativeOrderError):
        dv.DivergenceSpec.renyi(-1)


def test_renyi_monotone_in_order(rng):
    for _ in range(200):
        p, q = random_pair(rng, int(rng.integers(2, 7)))
        vals = [dv.renyi(a, p, q) for a in (0.3, 0.7, 1.0, 1.5, 3.0)]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


# -- JS, Tsallis, Hellinger, TV -------------------------------------------------

def test_jensen_shannon_examples():
    assert dv.jensen_shannon(P, P) == 0.0
    expected = log2(4 / 3) + 0.5 * log2(2 / 3) + 0.5
    assert dv.jensen_shannon([1, 0], U2) == pytest.approx(expected, abs=1e-15)
    assert dv.jensen_shannon([1, 0], U2) == pytest.approx(0.622556, abs=1e-6)
    assert dv.jensen_shannon([1, 0], [0, 1]) == pytest.approx(2.0)


def test_tsallis_examples():
    assert dv.tsallis(2, P, P) == pytest.approx(0.0, abs=1e-15)
    assert dv.tsallis(2, P, U2) == pytest.approx(0.25, abs=1e-15)
    assert abs(dv.tsallis(1, P, U2) - dv.kl(P, U2)) <= 1e-8
    assert dv.tsallis(2, [0.5, 0.5], [1.0, 0.0]) == math.inf


def test_tsallis_approaches_kl_in_nats_near_one():
    nats = dv.kl(P, U2) * math.log(2)
    assert dv.tsallis(1 + 1e-7, P, U2) == pytest.approx(nats, abs=1e-6)


def test_hellinger_examples():
    assert dv.hellinger(P, P) == 0.0
    assert dv.hellinger([1, 0], U2) == pytest.approx((1 - 1 / math.sqrt(2)) ** 2 + 0.5, abs=1e-15)
    assert dv.hellinger([1, 0], U2) == pytest.approx(2 - math.sqrt(2), abs=1e-15)
    assert dv.hellinger([1, 0], [0, 1]) == 2.0


def test_total_variation_examples():
    assert dv.total_variation(P, P) == 0.0
    assert dv.total_variation(P, U2) == 0.25
    assert dv.total_variation([1, 0], [0, 1]) == 1.0


# -- f-divergence -----------------------------------------------------------------

def test_f_divergence_examples():
    assert dv.f_divergence(dv.KL_GENERATOR, P, U2) == pytest.approx(0.188722, abs=1e-6)
    assert dv.f_divergence(dv.HELLINGER_GENERATOR, [1, 0], U2) == pytest.approx(0.585786, abs=1e-6)


def test_generator_must_vanish_at_one():
    with pytest.raises(GeneratorNotNormalizedError):
        dv.ConvexGenerator(lambda t: t ** 2)
    with pytest.raises(GeneratorNotNormalizedError):
        dv.f_divergence(lambda t: np.asarray(t) + 1.0, P, U2)


def test_generic_spec_requires_generator():
    with pytest.raises(UncertaintyError):
        dv.DivergenceSpec(dv.Family.GENERIC_F)


@pytest.mark.parametrize("gen, named", [
    (dv.KL_GENERATOR, dv.kl),
    (dv.TV_GENERATOR, dv.total_variation),
    (dv.HELLINGER_GENERATOR, dv.hellinger),
    (dv.JS_GENERATOR, dv.jensen_shannon),
    (dv.tsallis_generator(2.0), lambda p, q: dv.tsallis(2.0, p, q)),
    (dv.tsallis_generator(0.5), lambda p, q: dv.tsallis(0.5, p, q)),
])
def test_f_divergence_matches_named_family(rng, gen, named):
    for k in range(1000):
        p, q = random_pair(rng, int(rng.integers(2, 7)), sparse=k % 3 == 0)
        a, b = dv.f_divergence(gen, p, q), named(p, q)
        assert a == pytest.approx(b, abs=1e-10) or (math.isinf(a) and math.isinf(b))


def test_f_divergence_prices_zeros_of_q_with_slope():
    assert dv.f_divergence(dv.TV_GENERATOR, [1, 0], [0, 1]) == 1.0
    assert dv.f_divergence(dv.KL_GENERATOR, [1, 0], [0, 1]) == math.inf


# -- invariants -------------------------------------------------------------------

SPECS = [
    dv.DivergenceSpec.kl(),
    dv.DivergenceSpec.renyi(0.3),
    dv.DivergenceSpec.renyi(0.5),
    dv.DivergenceSpec.renyi(2.0),
    dv.DivergenceSpec.renyi(math.inf),
    dv.DivergenceSpec.jensen_shannon(),
    dv.DivergenceSpec.tsallis(0.5),
    dv.DivergenceSpec.tsallis(2.0),
    dv.DivergenceSpec.hellinger(),
    dv.DivergenceSpec.total_variation(),
    dv.DivergenceSpec.generic(dv.TV_GENERATOR),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label())
def test_non_negative_and_zero_on_diagonal(rng, spec):
    for _ in range(300):
        p, q = random_pair(rng, int(rng.integers(2, 7)))
        assert dv.divergence(spec, p, q) >= -1e-12
        assert abs(dv.divergence(spec, p, p)) <= 1e-12
        assert dv.divergence(spec, p, q) > 1e-12


@pytest.mark.parametrize("spec", [s for s in SPECS if s.symmetric], ids=lambda s: s.label())
def test_symmetric_families(rng, spec):
    for _ in range(300):
        p, q = random_pair(rng, int(rng.integers(2, 7)))
        assert dv.divergence(spec, p, q) == pytest.approx(dv.divergence(spec, q, p), abs=1e-12)


@pytest.mark.parametrize("spec", [dv.DivergenceSpec.kl(), dv.DivergenceSpec.renyi(2.0),
                                  dv.DivergenceSpec.tsallis(2.0)], ids=lambda s: s.label())
def test_asymmetry_witness_exists(rng, spec):
    found = False
    for _ in range(100):
        p, q = random_pair(rng, 3)
        if abs(dv.divergence(spec, p, q) - dv.divergence(spec, q, p)) > 1e-6:
            found = True
            break
    assert found


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.label())
@given(n=st.integers(2, 6), steps=st.integers(1, 12), seed=st.integers(0, 2**32 - 1))
def test_distance_to_uniform_is_schur_convex(spec, n, steps, seed):
    p, q = random_majorized_pair(n, steps, seed)
    u = uniform(n)
    assert dv.divergence(spec, p, u) >= dv.divergence(spec, q, u) - 1e-12
    if spec.family not in (dv.Family.KL,) and not (spec.family is dv.Family.RENYI and spec.alpha > 1) \
            and not (spec.family is dv.Family.TSALLIS and spec.beta > 1):
        assert dv.divergence(spec, u, p) >= dv.divergence(spec, u, q) - 1e-12


def test_printed_tsallis_variant_shifts_by_constant(rng):
    from induced_uncertainty.errata import printed_tsallis_divergence
    for _ in range(50):
        n = int(rng.integers(2, 6))
        p, q = random_pair(rng, n)
        beta = float(rng.uniform(0.2, 3.0))
        if abs(beta - 1) < 1e-3:
            continue
        shift = printed_tsallis_divergence(beta, p, q) - dv.tsallis(beta, p, q)
        assert shift == pytest.approx(-(n - 1) / (beta - 1), abs=1e-10)
