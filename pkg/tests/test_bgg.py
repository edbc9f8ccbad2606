from fractions import Fraction

import pytest

from superbgg.algebra import build_parabolic, wt
from superbgg.bgg import (
    bgg_verdict,
    natural_resolution_shape,
    kac_resolution,
    reproduce,
    weyl_coset,
)
from superbgg.errors import (
    LeviNotInEvenPart,
    NotTypeI,
    PreconditionViolated,
    UnknownScenario,
)
from superbgg.homology import KostantAnalysis
from superbgg.modules import build_kac_module

F0, F1 = Fraction(0), Fraction(1)


def test_natural_resolution_shape_43():
    shape = natural_resolution_shape(4, 3, 3)
    assert shape.degrees == [
        [(wt(1, 0, 0, 0, 0), 1)],
        [(wt(-1, 2, 0, 0, 0), 1)],
        [(wt(-2, 2, 1, 0, 0), 1)],
        [(wt(-3, 2, 2, 0, 0), 1)],
    ]


def test_natural_resolution_shape_63():
    shape = natural_resolution_shape(6, 3, 3)
    assert shape.degrees[0] == [(wt(1, 0, 0, 0, 0, 0), 1)]
    assert shape.degrees[2] == [(wt(-2, 2, 1, 0, 0, 0), 1)]
    assert shape.degrees[3] == [(wt(-3, 2, 1, 1, 0, 0), 1)]


def test_natural_resolution_shape_preconditions():
    with pytest.raises(PreconditionViolated):
        natural_resolution_shape(3, 2, 2)
    with pytest.raises(PreconditionViolated):
        natural_resolution_shape(4, 1, 2)
    with pytest.raises(PreconditionViolated):
        natural_resolution_shape(8, 3, 2)     # m - 2n = 2 > 1


def test_weyl_coset_gl21_borel(gl21, gl21_borel):
    coset = weyl_coset(gl21, gl21_borel)
    graded = coset.graded()
    assert len(graded[0]) == 1            # identity only
    assert len(graded[1]) == 1
    mat, _word = graded[1][0]
    assert coset.dot_action(mat, wt(1, 0, 0)) == wt(-1, 2, 0)


def test_weyl_coset_levi_full(gl21):
    p = build_parabolic(gl21, [0])        # l = g_0, W^1 trivial
    coset = weyl_coset(gl21, p)
    assert [length for _, _, length in coset.elements] == [0]


def test_kac_resolution_gl21(gl21, gl21_borel):
    shape = kac_resolution(gl21, gl21_borel, wt(1, 0, 0))
    assert shape.degrees == [
        [(wt(1, 0, 0), 1)],
        [(wt(-1, 2, 0), 1)],
    ]
    assert shape.terminates_at == 1


def test_kac_resolution_levi_is_g0(gl21):
    p = build_parabolic(gl21, [0])
    shape = kac_resolution(gl21, p, wt(1, 0, 0))
    assert shape.degrees == [[(wt(1, 0, 0), 1)]]
    assert shape.terminates_at == 0


def test_kac_resolution_matches_homology(gl21, gl21_borel):
    kac = build_kac_module(gl21, wt(1, 0, 0))
    an = KostantAnalysis(gl21_borel, kac, k_max=5)
    shape = kac_resolution(gl21, gl21_borel, wt(1, 0, 0))
    for k in range(5):
        predicted = dict(shape.degrees[k]) if k < len(shape.degrees) else {}
        assert an.homology(k).weight_multiplicities == predicted
    # typical type-I vanishing: H_k = 0 beyond dim n_0
    for k in range(2, 5):
        assert an.homology(k).homology_dimension == 0


def test_kac_resolution_guards(gl21, osp46, osp46_sec7):
    with pytest.raises(NotTypeI):
        kac_resolution(osp46, osp46_sec7, wt(1, 0, 0, 0, 0))
    p_odd = build_parabolic(gl21, [1])     # Levi contains the odd simple root
    with pytest.raises(LeviNotInEvenPart):
        kac_resolution(gl21, p_odd, wt(1, 0, 0))


def test_verdict_gl21_star(gl21, gl21_borel):
    v = bgg_verdict(gl21, gl21_borel, wt(1, 0, 0), 3)
    assert v.status == "Exists"
    assert v.basis_of_decision == "StarCondition"
    assert v.details["star_type"] == 1
    assert v.shape.degrees[0] == [(wt(1, 0, 0), 1)]
    assert v.shape.truncated


def test_verdict_gl12_honest(gl12, gl12_borel):
    v = bgg_verdict(gl12, gl12_borel, wt(1, 0, 0), 3)
    # every h-module is completely reducible, so necessity cannot fail; no
    # sufficient criterion applies either (H^0 != ker quabla_0)
    assert v.status == "Unknown"
    assert v.basis_of_decision == "Truncated"
    assert not v.details["predicates"][1]


def test_verdict_monotone_in_window(gl21, gl21_borel):
    v2 = bgg_verdict(gl21, gl21_borel, wt(1, 0, 0), 2)
    v3 = bgg_verdict(gl21, gl21_borel, wt(1, 0, 0), 3)
    assert v2.status == v3.status == "Exists"
    assert v2.shape.degrees == v3.shape.degrees[:3]


def test_verdict_shape_degree_zero(gl12, gl12_borel):
    v = bgg_verdict(gl12, gl12_borel, wt(1, 0, 0), 2)
    assert v.shape.degrees[0] == [(wt(1, 0, 0), 1)]


def test_reproduce_registry_smoke():
    assert reproduce("osp12-counterexample", lam=1)["passed"]
    assert reproduce("glmn-borel-natural")["passed"]
    assert reproduce("star-gl")["passed"]
    assert reproduce("kac-gl21")["passed"]
    with pytest.raises(UnknownScenario):
        reproduce("nonexistent-scenario")


def test_reproduce_osp46_scenarios():
    assert reproduce("bggtaut", m=4, n=3, k_max=3)["passed"]
    assert reproduce("forlapl-ker1")["passed"]
