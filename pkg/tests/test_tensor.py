# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

import pytest

from xtorelli.toolkit.errors import AlphabetMismatchError, MalformedInputError, ConstantTermError
from xtorelli.toolkit.expansion import exp, log, inverse
from xtorelli.toolkit.tensor import (TensorSeries, WeightedAlphabet, h_alphabet, ba_alphabet,
                                     b_alphabet, alphabet_by_name, series_mul)
from xtorelli.toolkit.utils import rational


def test_alphabets():
    assert h_alphabet(2).symbols == ('a1', 'a2', 'b1', 'b2')
    assert ba_alphabet(2).symbols == ('b1', 'b2', 'a1', 'a2')
    assert ba_alphabet(2).weights == (1, 1, 2, 2)
    assert b_alphabet(3).symbols == ('b1', 'b2', 'b3')
    assert alphabet_by_name('BA', 2) == ba_alphabet(2)
    assert ba_alphabet(1).weight(ba_alphabet(1).parse('b1.a1.a1')) == 5
    with pytest.raises(MalformedInputError):
        WeightedAlphabet([('x', 3)])
    with pytest.raises(MalformedInputError):
        alphabet_by_name('Q', 2)


def test_truncated_product():
    A = ba_alphabet(1)
    a = TensorSeries.letter(A, 'a1', 3)
    b = TensorSeries.letter(A, 'b1', 3)
    assert str(a * b) == 'a1.b1'
    assert (a * b) != (b * a)
    assert (a * a).is_zero()
    assert str((b + a) * (b + a)) == 'b1.b1 + b1.a1 + a1.b1'


def test_alphabet_mismatch():
    x = TensorSeries.letter(h_alphabet(1), 'a1', 2)
    y = TensorSeries.letter(ba_alphabet(1), 'a1', 2)
    with pytest.raises(AlphabetMismatchError):
        x + y
    with pytest.raises(AlphabetMismatchError):
        series_mul(x, y)
    assert series_mul(x, x).is_zero() is False


def test_homogeneous_slices():
    A = h_alphabet(1)
    x = TensorSeries(A, {(): 1, (0,): 2, (0, 1): '1/2'}, 3)
    assert x.weights() == [0, 1, 2]
    assert x.homogeneous(2).coefficient((0, 1)) == rational('1/2')
    assert x.constant == 1
    assert x.by_length(1).terms == {(0,): rational(2)}


def test_exp_log_inverse_pair():
    A = h_alphabet(1)
    x = TensorSeries.letter(A, 'a1', 5) + TensorSeries.letter(A, 'b1', 5)
    assert log(exp(x)) == x
    y = exp(x)
    assert exp(log(y)) == y
    assert y * inverse(y) == TensorSeries.one(A, 5)


def test_exp_log_require_constant_term():
    A = h_alphabet(1)
    with pytest.raises(ConstantTermError):
        exp(TensorSeries.one(A, 3))
    with pytest.raises(ConstantTermError):
        log(TensorSeries.letter(A, 'a1', 3))


def test_bch_second_order():
    A = h_alphabet(1)
    a = TensorSeries.letter(A, 'a1', 3)
    b = TensorSeries.letter(A, 'b1', 3)
    z = log(exp(a) * exp(b))
    assert z.homogeneous(1) == a + b
    assert z.homogeneous(2) == (a * b - b * a) / 2
