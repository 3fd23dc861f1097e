import pytest

import ordhomeo as oh
from ordhomeo import Ordinal, PwHomeo

SWAP = """
[0, 0] -> [0, 0]
(0, w] -> (w, w*2]
(w, w*2] -> (0, w]
"""


def test_ordinal_arithmetic():
    w = Ordinal.omega()
    assert Ordinal(1) + w == w
    assert str(w * Ordinal(2)) == "w*2"
    assert Ordinal("w^w").rank() == w
    assert Ordinal(3).left_subtract(w) == w
    assert Ordinal("w^2+w*3").rank() == Ordinal(1)
    assert Ordinal(10**40) > Ordinal(10**39)
    assert len({Ordinal("1+w"), Ordinal("w")}) == 1


def test_errors_map_to_python_exceptions():
    with pytest.raises(oh.ParseError):
        Ordinal("w^^2")
    with pytest.raises(ValueError):
        Ordinal("w+1").left_subtract(Ordinal("w"))
    with pytest.raises(oh.ValidationError):
        PwHomeo.parse("[0, 0] -> (0, w]\n(0, w] -> [0, 0]\n")
    with pytest.raises(oh.PreconditionError):
        oh.make_transitive([("w", 3)])


def test_homeo_group_and_fixed_points():
    g = PwHomeo.parse(SWAP)
    assert g(Ordinal.omega()) == Ordinal("w*2")
    assert (g @ g).is_identity
    assert g.inverse() == g
    assert g.order() == 2
    assert str(oh.fixed_points(g)) == "{0} ∪ (w*2, ∞)"
    assert oh.find_fixed_point_above([g], 1) == Ordinal("w*3")
    assert oh.invariant_prefix(g, 1) == Ordinal("w*2")


def test_dynamics_witnesses():
    g = oh.make_transitive([("w", "w*2")])
    assert g == PwHomeo.parse(SWAP)
    cert = oh.roelcke_decompose(g, ["w"])
    assert cert["u"] @ cert["h"] @ cert["u_prime"] == g
    assert cert["u"](Ordinal("w")) == Ordinal("w")
    h, k, alpha = oh.dense_approx(g, ["w"], [1])
    assert alpha == Ordinal("w*2") and h == g and k(1) > alpha
    t = oh.swap_points(5, "w+5")
    assert t(5) == Ordinal("w+5")
    assert oh.in_baire_T(oh.baire_density_witness(t, 5), 5)


def test_sieve():
    h = oh.satisfiable("1 : {7}\n2 : {7, 8}\n")
    assert h == [(Ordinal(1), Ordinal(7)), (Ordinal(2), Ordinal(8))]
    assert oh.satisfiable("1 : {7, 8}\n2 : {7, 8}\n3 : {7, 8}\n") is None
    assert oh.extend_to_permutation([(1, 2), (2, 3)]) == [[Ordinal(1), Ordinal(2), Ordinal(3)]]


def test_cli_passthrough():
    code, out, err = oh.run_cli(["ord", "eval", "1 + w"])
    assert (code, out, err) == (0, "w\n", "")
    code, _, err = oh.run_cli(["ord", "eval", "w^^2"])
    assert code == 2 and "parse error" in err
