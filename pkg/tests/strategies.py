from hypothesis import strategies as st

from sclab.automata import Alphabet, Dfa


@st.composite
def dfas(draw, max_n=8, letters="abcd", min_letters=1, max_letters=4):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(min_letters, min(max_letters, len(letters))))
    names = sorted(draw(st.sets(st.sampled_from(letters), min_size=k, max_size=k)))
    rows = [draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)) for _ in names]
    finals = draw(st.sets(st.integers(0, n - 1)))
    initial = draw(st.integers(0, n - 1))
    return Dfa(n, Alphabet.of(names), rows, initial, finals)


@st.composite
def transformations(draw, n):
    from sclab.transforms import Transformation

    return Transformation(tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))))
