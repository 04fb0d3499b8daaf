import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import R8, RW
from foxcoh.errors import ParseError, UnknownGeneratorError
from foxcoh.exactla import IntMatrix, smith_normal_form
from foxcoh.words import (
    IDENTITY,
    FreeWord,
    GroupRingElement,
    Presentation,
    abelianization,
    abelianization_matrix,
    augmentation,
    fox_derivative,
    parse_word,
)

N = 3
letters = st.tuples(st.integers(0, N - 1), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=64).map(FreeWord)
short_words = st.lists(letters, max_size=8).map(FreeWord)
ring = st.lists(st.tuples(short_words, st.integers(-3, 3)), max_size=4).map(GroupRingElement)


def gen(i):
    return GroupRingElement.of(FreeWord.generator(i))


def w(text):
    return parse_word(text, "ab")


def test_parse_examples():
    assert parse_word("aA", "ab") == IDENTITY
    # b^-1 a b a^-1 b a b^-1 a^-1 b a^-1
    assert w(R8).letters == ((1, -1), (0, 1), (1, 1), (0, -1), (1, 1),
                             (0, 1), (1, -1), (0, -1), (1, 1), (0, -1))
    # a b a^-3 b^2 a^-1 b^-1 a^3 b^-2
    expected = [(0, 1), (1, 1)] + [(0, -1)] * 3 + [(1, 1)] * 2 + [(0, -1), (1, -1)] \
        + [(0, 1)] * 3 + [(1, -1)] * 2
    assert list(w(RW).letters) == expected


def test_parse_ignores_whitespace_and_reduces():
    assert w(" a b\tB A a ") == w("a")


def test_parse_errors():
    with pytest.raises(ParseError) as info:
        parse_word("ab1", "ab")
    assert info.value.position == 2
    with pytest.raises(UnknownGeneratorError):
        parse_word("abc", "ab")


def test_fox_examples():
    a = FreeWord.generator(0)
    assert fox_derivative(0, a) == GroupRingElement.of(IDENTITY)
    assert fox_derivative(1, a) == GroupRingElement()
    assert fox_derivative(0, a.inverse()) == -GroupRingElement.of(a.inverse())


def test_fox_derivatives_of_figure_eight_relator():
    R = w(R8)
    da = GroupRingElement.of(w("B")) - w("BabA") + w("BabAb") - w("BabAbaBA") - w("BabAbaBAbA")
    db = -GroupRingElement.of(w("B")) + w("Ba") + w("BabA") - w("BabAbaB") + w("BabAbaBA")
    assert fox_derivative(0, R) == da
    assert fox_derivative(1, R) == db


def test_augmentation_examples():
    assert augmentation(GroupRingElement.of(w("abAB"))) == 1
    assert augmentation(fox_derivative(0, w(R8))) == -1
    assert augmentation(fox_derivative(1, w(R8))) == 1


def _exponent_sums(word, n):
    sums = [0] * n
    for g, e in word.letters:
        sums[g] += e
    return sums


def test_abelianization_matrices():
    p8 = Presentation.parse("ab", [R8])
    assert abelianization_matrix(p8) == IntMatrix.from_rows([[-1], [1]])
    assert abelianization_matrix(Presentation.parse("ab", ["aaa", "bbb"])) == \
        IntMatrix.from_rows([[3, 0], [0, 3]])
    assert abelianization_matrix(Presentation.parse("ab", [RW])) == IntMatrix.from_rows([[0], [0]])


def test_abelianizations():
    assert abelianization(Presentation.parse("ab", [R8]))[1] == 1
    assert abelianization(Presentation.parse("ab", [RW])) == ((), 2)
    assert smith_normal_form(abelianization_matrix(Presentation.parse("ab", ["aaa", "bbb"]))) == ((3, 3), 0)


@given(st.lists(words, min_size=1, max_size=3))
def test_abelianization_matrix_is_augmented_fox_jacobian(rels):
    p = Presentation([*"abc"], rels)
    M = abelianization_matrix(p).tolist()
    for j, r in enumerate(rels):
        col = _exponent_sums(r, N)
        for i in range(N):
            assert M[i][j] == augmentation(fox_derivative(i, r)) == col[i]


@given(words)
@settings(max_examples=300)
def test_mean_value_theorem(u):
    # u - eps(u) = sum_i (d_i u)(x_i - 1)
    lhs = GroupRingElement.of(u) - augmentation(u)
    rhs = GroupRingElement()
    for i in range(N):
        rhs = rhs + fox_derivative(i, u) * (gen(i) - 1)
    assert lhs == rhs


@given(ring)
@settings(max_examples=200)
def test_mean_value_theorem_on_ring_elements(u):
    rhs = GroupRingElement()
    for i in range(N):
        rhs = rhs + fox_derivative(i, u) * (gen(i) - 1)
    assert u - augmentation(u) == rhs


@given(words, words)
@settings(max_examples=300)
def test_product_rule_on_words(u, v):
    for i in range(N):
        lhs = fox_derivative(i, u * v)
        rhs = fox_derivative(i, u) * augmentation(v) + GroupRingElement.of(u) * fox_derivative(i, v)
        assert lhs == rhs


@given(ring, ring)
@settings(max_examples=200)
def test_derivation_on_ring_elements(u, v):
    for i in range(N):
        assert fox_derivative(i, u + v) == fox_derivative(i, u) + fox_derivative(i, v)
        assert fox_derivative(i, u * v) == \
            fox_derivative(i, u) * augmentation(v) + u * fox_derivative(i, v)


@given(words)
def test_print_parse_round_trip(u):
    text = u.to_string("abc")
    assert parse_word(text, "abc") == u
    assert parse_word(text, "abc").to_string("abc") == text


@given(words)
def test_inverse(u):
    assert (u * u.inverse()).is_identity()


@pytest.mark.parametrize("seed", range(100))
def test_free_reduction_confluent(seed):
    # inserting cancelling pairs anywhere never changes the reduced word
    rng = random.Random(seed)
    base = [(rng.randrange(N), rng.choice((1, -1))) for _ in range(rng.randint(0, 20))]
    noisy = list(base)
    for _ in range(rng.randint(1, 15)):
        pos = rng.randint(0, len(noisy))
        g, e = rng.randrange(N), rng.choice((1, -1))
        noisy[pos:pos] = [(g, e), (g, -e)]
    assert FreeWord(noisy) == FreeWord(base)
    reduced = FreeWord(noisy).letters
    assert all(reduced[k] != (reduced[k + 1][0], -reduced[k + 1][1]) for k in range(len(reduced) - 1))


def test_presentation_validation():
    with pytest.raises(UnknownGeneratorError):
        Presentation.parse("ab", ["abc"])
    p = Presentation.parse("xy", ["xyXY"])
    assert repr(p) == "<x, y | xyXY>"
