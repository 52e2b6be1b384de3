import pytest
from hypothesis import given, settings, strategies as st

from cordrep.braid import (BraidParseError, BraidWord, artin_images, artin_letter,
                           capping_words, closure_permutation, components,
                           exponent_sums,
                           delete_strands, format_braid, free_reduce,
                           linking_numbers, longitude_word, parse_braid,
                           sort_ordered_partition, substitute_word, word_inverse,
                           word_mul)


def braids(max_n=4, max_len=7):
    return st.integers(2, max_n).flatmap(lambda n: st.builds(
        lambda ls: BraidWord(n, tuple(ls)),
        st.lists(st.integers(1, n - 1).flatmap(lambda k: st.sampled_from([k, -k])), max_size=max_len)))


def test_parse_and_format():
    b = parse_braid("n=3;  1 -2  1")
    assert b.letters == (1, -2, 1)
    assert format_braid(b) == "n=3; 1 -2 1"
    assert format_braid(parse_braid("n=1;")) == "n=1;"
    for bad in ["1 2", "n=2; 3", "n=2; 1 x", "n=0;", "n=2; 0"]:
        with pytest.raises(BraidParseError):
            parse_braid(bad)


def test_components_of_small_links():
    assert components(parse_braid("n=2; 1 1")).r == 2
    assert components(parse_braid("n=2; 1 1 1")).r == 1
    assert components(parse_braid("n=3; 1 1 2 2 -1 -2 -2")).r == 2
    assert components(parse_braid("n=1;")).r == 1


def test_linking_numbers():
    lk, wr = linking_numbers(parse_braid("n=2; 1 1"))
    assert lk[(1, 2)] == 1 and wr == {1: 0, 2: 0}
    lk, wr = linking_numbers(parse_braid("n=2; -1 -1"))
    assert lk[(1, 2)] == -1
    lk, wr = linking_numbers(parse_braid("n=3; 1 1 2 2 -1 -2 -2"))
    assert lk[(1, 2)] == 0
    _, wr = linking_numbers(parse_braid("n=2; 1 1 1"))
    assert wr == {1: 3}


def _is_automorphism_image(imgs, n):
    # the product m_1 ... m_n is fixed by every braid
    prod = word_mul(*[imgs[t] for t in range(1, n + 1)])
    return prod == tuple(range(1, n + 1))


@settings(max_examples=150, deadline=None)
@given(braids())
def test_artin_fixes_boundary_word(b):
    assert _is_automorphism_image(artin_images(b), b.n)


@settings(max_examples=150, deadline=None)
@given(braids())
def test_artin_inverse_braid(b):
    imgs = artin_images(b * b.inverse())
    assert all(imgs[t] == (t,) for t in imgs)


@settings(max_examples=150, deadline=None)
@given(braids(), braids())
def test_artin_is_an_antihomomorphism_of_substitutions(b, c):
    if b.n != c.n:
        return
    ib, ic = artin_images(b), artin_images(c)
    bc = artin_images(b * c)
    assert all(bc[t] == substitute_word(ic[t], ib) for t in bc)


def test_braid_relations():
    for n in (3, 4):
        for k in range(1, n - 1):
            lhs = artin_images(BraidWord(n, (k, k + 1, k)))
            rhs = artin_images(BraidWord(n, (k + 1, k, k + 1)))
            assert lhs == rhs
        if n == 4:
            assert artin_images(BraidWord(4, (1, 3))) == artin_images(BraidWord(4, (3, 1)))


def test_letter_action():
    assert artin_letter((1,), 1, 1) == (1, 2, -1)
    assert artin_letter((2,), 1, 1) == (1,)
    assert artin_letter(artin_letter((1,), 1, 1), 1, -1) == (1,)


@settings(max_examples=150, deadline=None)
@given(braids())
def test_capping_meridians_equal_artin_images(b):
    cap = capping_words(b)
    imgs = artin_images(b)
    assert all(cap.meridian(i) == imgs[i] for i in range(1, b.n + 1))


@settings(max_examples=100, deadline=None)
@given(braids())
def test_capping_top_is_inverse_permutation(b):
    cap = capping_words(b)
    perm = closure_permutation(b)
    assert all(perm[cap.top[i - 1] - 1] == i for i in range(1, b.n + 1))


def test_longitude_framing_of_trefoil():
    word, f = longitude_word(parse_braid("n=2; 1 1 1"), 1)
    assert f == -3
    word, f = longitude_word(parse_braid("n=2; 1 1"), 1)
    # a conjugate of the other component's meridian
    assert f == 0 and exponent_sums(word, 2) == [0, 1]


@settings(max_examples=100, deadline=None)
@given(braids())
def test_sort_ordered_partition(b):
    b2, relabel = sort_ordered_partition(b)
    comp = components(b2).comp
    assert list(comp) == sorted(comp)
    assert components(b2).r == components(b).r
    assert sorted(relabel) == list(range(1, b.n + 1))


def test_delete_strands_gives_sublink():
    wh = parse_braid("n=3; 1 1 2 2 -1 -2 -2")
    cm = components(wh)
    for c in (1, 2):
        sub = delete_strands(wh, cm.strands(c))
        assert sub.n == len(cm.strands(c))
        assert components(sub).r == 1
    hopf3 = parse_braid("n=3; 1 1 2 2")
    cm = components(hopf3)
    sub = delete_strands(hopf3, cm.strands(1) + cm.strands(2))
    assert sub == BraidWord(2, (1, 1))


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert word_inverse((1, -2)) == (2, -1)
