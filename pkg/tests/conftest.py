from fractions import Fraction

from hypothesis import strategies as st

from qtangent.exact import LaurentPoly

coeffs = st.one_of(
    st.integers(min_value=-6, max_value=6),
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
)


@st.composite
def laurent_polys(draw, min_exp=-6, max_exp=8, max_terms=6):
    terms = draw(
        st.dictionaries(st.integers(min_value=min_exp, max_value=max_exp), coeffs, max_size=max_terms)
    )
    return LaurentPoly(terms)


@st.composite
def nonzero_polys(draw, **kw):
    p = draw(laurent_polys(**kw))
    if p.is_zero():
        p = LaurentPoly({draw(st.integers(min_value=-3, max_value=3)): draw(st.integers(1, 4))})
    return p


@st.composite
def q_polys(draw, max_deg=6):
    """Ordinary polynomials in q with small integer coefficients."""
    cs = draw(st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=max_deg + 1))
    return LaurentPoly({2 * i: c for i, c in enumerate(cs)})


rationals = st.fractions(min_value=Fraction(-5, 2), max_value=Fraction(5, 2), max_denominator=7)
