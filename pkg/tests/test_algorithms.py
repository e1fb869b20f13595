import pytest
from hypothesis import given, settings, strategies as st

from janetbasis import (
    CriteriaConfig,
    Polynomial,
    TimeLimitExceeded,
    VariableContext,
    compute,
    gerdt,
    generate_cyclic,
    invbasis,
    load_fixture,
    tail_autoreduce,
    vargerdt,
)
from janetbasis.algorithms import prepare_input
from janetbasis.engine import heads_involutively_autoreduced, theorem5_failures
from janetbasis.oracle import buchberger, ideal_contains, verify_involutive_output

from conftest import poly

ALGS = (invbasis, gerdt, vargerdt)
TOY = [poly("x^2"), poly("y^2")]


@pytest.mark.parametrize("alg", ALGS)
def test_toy(alg):
    G, stats = alg(TOY)
    assert set(G) == {poly("x^2"), poly("y^2"), poly("x*y^2")}
    assert stats.basis_size == 3


def test_toy_vargerdt_uses_c1():
    _, stats = vargerdt(TOY)
    assert stats.c1_hits >= 1


@pytest.mark.parametrize("alg", ALGS)
def test_degenerate_inputs(alg):
    assert alg([poly("1")])[0] == [poly("1")]
    assert alg([poly("x")])[0] == [poly("x")]
    assert alg([poly("2*x"), poly("x")])[0] == [poly("x")]
    assert alg([Polynomial.zero(VariableContext("x y"))])[0] == []
    assert alg([poly("x^2 + y"), poly("1")])[0] == [poly("1")]


def test_compute_dispatch():
    assert compute(TOY, "gerdt")[0] == gerdt(TOY)[0]
    with pytest.raises(ValueError):
        compute(TOY, "buchberger")
    with pytest.raises(ValueError):
        vargerdt(TOY, tie_break="random")


def test_order_override():
    F = [poly("x + y^3"), poly("y^4 - 1")]
    G, _ = vargerdt(F, order="lex")
    assert all(g.order.name == "lex" for g in G)
    assert not theorem5_failures(G)


def test_prepare_input():
    F = [poly("2*x"), poly("x"), Polynomial.zero(VariableContext("x y")), poly("x^2 + x")]
    assert prepare_input(F) == [poly("x"), poly("x^2 + x")]
    assert prepare_input(F, autoreduce=True) == [poly("x")]


def test_time_limit():
    with pytest.raises(TimeLimitExceeded) as exc:
        vargerdt(load_fixture("katsura5").polys, time_limit=1e-9)
    assert exc.value.stats.selected <= 1


def small_systems():
    yield "toy", TOY
    yield "liu", load_fixture("liu").polys
    yield "noon4", load_fixture("noon4").polys
    yield "cyclic4", generate_cyclic(4).polys
    yield "katsura4", load_fixture("katsura4").polys


@pytest.mark.parametrize("name, F", list(small_systems()), ids=lambda x: x if isinstance(x, str) else "")
def test_three_algorithms_agree(name, F):
    ref = buchberger(F)
    outs = []
    for alg in ALGS:
        G, _ = alg(F)
        assert verify_involutive_output(F, G, ref).ok
        outs.append(tail_autoreduce(G))
    assert outs[0] == outs[1] == outs[2]


@pytest.mark.parametrize("name, F", list(small_systems()), ids=lambda x: x if isinstance(x, str) else "")
def test_criteria_soundness(name, F):
    base, off = vargerdt(F, cfg=CriteriaConfig.none())
    base = tail_autoreduce(base)
    for alg in (gerdt, vargerdt):
        for preset in ("c1,c2", "all", "c3", "c4"):
            G, on = alg(F, cfg=CriteriaConfig.parse(preset))
            assert tail_autoreduce(G) == base
            assert off.zero_reductions >= on.zero_reductions
        G, _ = alg(F, cfg=CriteriaConfig.parse("none", rewritten=True))
        assert tail_autoreduce(G) == base


@pytest.mark.parametrize("name, F", list(small_systems()), ids=lambda x: x if isinstance(x, str) else "")
def test_conservation_audit(name, F):
    G, s = vargerdt(F)
    assert s.selected == s.criteria_hits() + s.zero_reductions + s.inserted
    assert s.triples_created == s.selected + s.rewritten_hits + s.basis_size
    G, s = invbasis(F)
    assert s.selected == s.zero_reductions + s.inserted


def test_birth_tie_break_same_basis():
    F = load_fixture("noon4").polys
    a, _ = vargerdt(F, tie_break="birth")
    b, _ = vargerdt(F)
    assert tail_autoreduce(a) == tail_autoreduce(b)


@pytest.mark.parametrize("alg", (gerdt, vargerdt))
def test_intermediate_elements_in_ideal(alg, monkeypatch):
    """Everything the loop inserts lies in the input ideal."""
    import janetbasis.algorithms as A

    F = load_fixture("liu").polys
    ref = buchberger(F)
    seen = []
    original = A.BasisState.refresh

    def spy(self):
        seen.extend(t.poly for t in self.T)
        seen.extend(q.poly for q in self.Q)
        return original(self)

    monkeypatch.setattr(A.BasisState, "refresh", spy)
    alg(F)
    assert seen and all(ideal_contains(ref, f) for f in seen)


CTX = VariableContext("x y z")
monos = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
coeffs = st.integers(-3, 3).filter(bool)
polys = st.dictionaries(monos, coeffs, min_size=1, max_size=3).map(lambda d: Polynomial(CTX, d))


@settings(max_examples=25, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3))
def test_random_systems(F):
    ref = buchberger(F)
    outs = []
    for alg in ALGS:
        G, _ = alg(F)
        rep = verify_involutive_output(F, G, ref)
        assert rep.ok, rep
        outs.append(tail_autoreduce(G))
    assert outs[0] == outs[1] == outs[2]
    assert heads_involutively_autoreduced(outs[0])
    G, _ = vargerdt(F, cfg=CriteriaConfig.parse("all"))
    assert tail_autoreduce(G) == outs[0]
