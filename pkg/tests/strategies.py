"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from dtableau.signed_perms import SignedPermutation, delta


@st.composite
def signed_perms(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))


def sequences(min_n=1, max_n=6):
    return signed_perms(min_n, max_n).map(delta)
