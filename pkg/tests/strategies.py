"""Hypothesis strategies for bundle expressions."""
from hypothesis import strategies as st

from bbwcalc.bundles import O, Q, U, DirectSum, Dual, Sym, Tensor, Wedge

leaves = st.one_of(st.just(U()), st.just(Q()), st.integers(-2, 2).map(O))


def _extend(children):
    return st.one_of(
        children.map(Dual),
        st.tuples(children, children).map(lambda t: Tensor(*t)),
        st.tuples(children, children).map(lambda t: DirectSum(*t)),
        st.tuples(st.integers(0, 2), children).map(lambda t: Wedge(*t)),
        st.tuples(st.integers(0, 2), children).map(lambda t: Sym(*t)),
    )


expressions = st.recursive(leaves, _extend, max_leaves=4)
