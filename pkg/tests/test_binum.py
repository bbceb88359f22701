import itertools

import pytest

from biforge.binum import (
    BinDigit, BinNum, binnum, bplus, bplus_rewrite, btimes,
    from_construction, is_bnum, normalize, of_nat, shift, succ_b,
    to_construction, to_nat,
)
from biforge.errors import NotBnum, StuckRewrite
from biforge.semantics import Environment, eval_nat
from biforge.syntax import Plus, Succ, TT, Var, Zero

D0, D1 = BinDigit.D0, BinDigit.D1


def all_numerals(max_len):
    for length in range(1, max_len + 1):
        for bits in itertools.product((0, 1), repeat=length):
            yield binnum(bits)


def test_binnum_validation():
    with pytest.raises(ValueError):
        BinNum(())
    assert len(binnum([0, 1, 1])) == 3


def test_to_nat():
    assert to_nat(binnum([0])) == 0
    assert to_nat(binnum([1])) == 1
    assert to_nat(binnum([0, 1])) == 2


def test_of_nat():
    assert of_nat(0) == binnum([0])
    assert of_nat(1) == binnum([1])
    assert of_nat(6) == binnum([0, 1, 1])
    for n in range(300):
        assert to_nat(of_nat(n)) == n


def test_succ_b():
    assert succ_b(binnum([0])) == binnum([1])
    assert succ_b(binnum([1])) == binnum([0, 1])
    assert succ_b(binnum([1, 1])) == binnum([0, 0, 1])


def test_shift():
    assert shift(binnum([1])) == binnum([0, 1])
    assert shift(binnum([0])) == binnum([0, 0])
    assert to_nat(shift(binnum([1, 1]))) == 6


def test_bplus_anchors():
    assert bplus(binnum([1]), binnum([1])) == binnum([0, 1])
    b = binnum([0, 1, 1])
    assert to_nat(bplus(b, binnum([0]))) == to_nat(b)
    assert to_nat(bplus(of_nat(13), of_nat(29))) == 42


def test_btimes_anchors():
    a = binnum([1, 0, 1])
    assert btimes(a, binnum([0])) == binnum([0])
    assert btimes(a, binnum([1])) == a
    assert to_nat(btimes(of_nat(6), of_nat(7))) == 42


def test_normalize():
    assert normalize(binnum([1, 0])) == binnum([1])
    assert normalize(binnum([0, 0])) == binnum([0])
    assert normalize(binnum([0, 1])) == binnum([0, 1])
    for b in all_numerals(6):
        assert to_nat(normalize(b)) == to_nat(b)
        assert normalize(normalize(b)) == normalize(b)


def test_of_nat_to_nat_is_normalize():
    for b in all_numerals(8):
        assert of_nat(to_nat(b)) == normalize(b)


def test_coherence_small():
    # exhaustive at <= 12 digits lives in the acceptance suite
    for b in all_numerals(8):
        assert to_nat(succ_b(b)) == to_nat(b) + 1
        assert to_nat(shift(b)) == 2 * to_nat(b)


def test_to_construction_anchors():
    zero2 = Plus(Plus(Zero(), Zero()), Zero())
    one2 = Plus(Plus(Zero(), Zero()), Succ(Zero()))
    assert to_construction(binnum([0])) == zero2
    assert to_construction(binnum([1])) == one2
    assert to_construction(binnum([0, 1])) == Plus(Plus(one2, one2), Zero())


def test_is_bnum():
    assert is_bnum(to_construction(binnum([0])))
    assert not is_bnum(Var("x"))
    assert not is_bnum(Zero())
    assert is_bnum(to_construction(of_nat(6)))
    # low digit beyond one breaks the grammar
    two = Succ(Succ(Zero()))
    assert not is_bnum(Plus(Plus(Zero(), Zero()), two))


def test_construction_round_trip():
    assert from_construction(to_construction(of_nat(9))) == of_nat(9)
    with pytest.raises(NotBnum):
        from_construction(TT())
    for b in all_numerals(7):
        assert from_construction(to_construction(b)) == b


def test_to_construction_evaluates_to_value():
    e = Environment()
    for b in all_numerals(7):
        assert eval_nat(to_construction(b), e) == to_nat(b)


def test_rewrite_anchors():
    one = to_construction(binnum([1]))
    two = to_construction(binnum([0, 1]))
    zero = to_construction(binnum([0]))
    assert bplus_rewrite(one, one) == two
    assert bplus_rewrite(two, zero) == two
    with pytest.raises(NotBnum):
        bplus_rewrite(Var("x"), one)


def expected_stuck(a: int, b: int) -> bool:
    """Coverage gap of the literal rule set, derived by hand: rewriting
    strips one low digit from both sides until the left operand is a
    single digit; the remaining uncovered redex is 1 + w with w odd and
    at least 3."""
    if a == 0 or b == 0:
        return False
    k = a.bit_length() - 1
    w = b >> k
    return w >= 3 and w % 2 == 1


def test_rewrite_agrees_with_direct_or_sticks():
    for a in range(32):
        for b in range(32):
            ta = to_construction(of_nat(a))
            tb = to_construction(of_nat(b))
            try:
                result = from_construction(bplus_rewrite(ta, tb))
                stuck = False
                assert to_nat(result) == a + b
            except StuckRewrite:
                stuck = True
            assert stuck == expected_stuck(a, b), (a, b)


def test_rewrite_on_noncanonical_inputs():
    one = to_construction(binnum([1]))
    # non-canonical zero: the one-plus-even rule still covers it
    double_zero = to_construction(binnum([0, 0]))
    assert to_nat(from_construction(bplus_rewrite(one, double_zero))) == 1
    got = from_construction(bplus_rewrite(double_zero, double_zero))
    assert to_nat(got) == 0
    # non-canonical three keeps the same coverage gap as canonical three
    padded_three = to_construction(binnum([1, 1, 0]))
    with pytest.raises(StuckRewrite):
        bplus_rewrite(one, padded_three)


def test_meaning_formulas_small():
    for a in all_numerals(5):
        va = to_nat(a)
        for b in all_numerals(5):
            vb = to_nat(b)
            assert to_nat(bplus(a, b)) == va + vb
            assert to_nat(btimes(a, b)) == va * vb
