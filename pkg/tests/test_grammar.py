"""Formal derivative on indexed letters and the four grammar identities."""
import pytest

from lstirling.algebra import Poly
from lstirling.grammar import (
    FormalPoly,
    Grammar,
    GrammarError,
    Letter,
    Monomial,
    check_jc_grammar,
    check_js_grammar,
    check_stirling1,
    check_stirling2,
    derive,
    derive_seq,
    jc_grammar,
    js_grammar,
)

a0 = Letter("a", 0)
a1 = Letter("a", 1)
b = Letter("b")
c = Letter("c")


def test_letter_repr_and_ordering():
    assert repr(Letter("a", 2)) == "a_2"
    assert repr(b) == "b"
    assert Letter("a", 1).sort_key() < Letter("a", 2).sort_key()
    assert Letter("b").sort_key() < Letter("c").sort_key()


def test_monomial_algebra():
    m = Monomial.of((b, 1), (c, 2))
    assert m.render() == "b c^2"
    assert m.degree_of(c) == 2
    assert (m * Monomial.of((c, 1))).degree_of(c) == 3
    assert m.remove_one(c) == Monomial.of((b, 1), (c, 1))
    assert Monomial().is_unit()
    assert Monomial().render() == "1"
    with pytest.raises(ValueError):
        Monomial(((b, -1),))


def test_formal_poly_addition_cancels():
    m = Monomial.of((b, 1))
    p = FormalPoly.term(m, 1) - FormalPoly.term(m, 1)
    assert p.is_zero()
    assert p.render() == "0"


def test_formal_poly_coefficients_live_in_a_polynomial_ring():
    m = Monomial.of((b, 1))
    p = FormalPoly.term(m, Poly((1, 1))).scale(Poly((0, 1)))
    assert p.coefficient(m) == Poly((0, 1, 1))


def test_formal_poly_multiplication():
    p = FormalPoly.letter(b) + FormalPoly.letter(c)
    q = p * p
    assert q.coefficient(Monomial.of((b, 2))) == Poly((1,))
    assert q.coefficient(Monomial.of((b, 1), (c, 1))) == Poly((2,))
    assert q.coefficient(Monomial.of((c, 2))) == Poly((1,))


def test_grammar_from_mapping_and_constants():
    g = Grammar({b: FormalPoly.letter(c)}, constants=(c,))
    assert derive(g, FormalPoly.letter(b)) == FormalPoly.letter(c)
    assert derive(g, FormalPoly.letter(c)).is_zero()


def test_grammar_unknown_letter_raises():
    g = Grammar({b: FormalPoly.letter(c)})
    with pytest.raises(GrammarError):
        derive(g, FormalPoly.letter(c))


def test_derivative_obeys_the_leibniz_rule():
    x, y = Letter("x"), Letter("y")
    g = Grammar({x: FormalPoly.term(Monomial.of((x, 1), (y, 1))), y: FormalPoly.letter(y)})
    # D(xy) = D(x) y + x D(y) = x y^2 + x y
    got = derive(g, FormalPoly.term(Monomial.of((x, 1), (y, 1))))
    assert got.coefficient(Monomial.of((x, 1), (y, 2))) == Poly((1,))
    assert got.coefficient(Monomial.of((x, 1), (y, 1))) == Poly((1,))


def test_derivative_handles_powers():
    x = Letter("x")
    g = Grammar({x: FormalPoly.letter(x)})
    got = derive(g, FormalPoly.term(Monomial.of((x, 3))))
    assert got.coefficient(Monomial.of((x, 3))) == Poly((3,))


def test_derive_seq_empty_returns_seed():
    seed = FormalPoly.letter(b)
    assert derive_seq([], seed) == seed


# -- the four grammar identities ---------------------------------------------------


def test_set_partition_grammar():
    for n in range(0, 9):
        assert check_stirling2(n)


def test_cycle_grammar():
    for n in range(0, 9):
        assert check_stirling1(n)


def test_second_kind_bivariate_grammar():
    for n in range(0, 8):
        assert check_js_grammar(n)


def test_first_kind_bivariate_grammar():
    for n in range(0, 8):
        assert check_jc_grammar(n)


def test_second_kind_grammar_first_two_derivatives_render_exactly():
    g = js_grammar()
    seed = FormalPoly.letter(a0)
    assert derive_seq([g], seed).render() == "a_1 c"
    assert derive_seq([g, g], seed).render() == "a_2 b c^2 + (1+z) a_1 c"


def test_first_kind_grammar_first_two_derivatives_render_exactly():
    seed = FormalPoly.term(Monomial.of((Letter("a"), 1), (Letter("b", 0), 1)))
    assert derive_seq([jc_grammar(1)], seed).render() == "a b_1"
    assert derive_seq([jc_grammar(1), jc_grammar(2)], seed).render() == "a b_2 + (1+z) a b_1"
