"""Generators of valid 4-dimensional Lie algebras for property tests.

Each algebra is a known Lie algebra pushed through a change of basis, so the
Jacobi identity holds by construction.  Base changes drawn from the commutant
of the standard triple keep an integrable structure integrable; generic ones
usually break integrability, which exercises the negative branches.
"""

import random

from hypothesis import assume
from hypothesis import strategies as st

from hnlie.catalog import CATALOG
from hnlie.exact import DegenerateError, Matrix4
from hnlie.liealg import LieAlgebra, change_basis


def semidirect(D):
    """R acting on R^3 = span(e2, e3, e4) by the 3x3 matrix D."""
    return LieAlgebra.from_brackets(
        {(1, j + 2): {k + 2: D[k][j] for k in range(3) if D[k][j]} for j in range(3)}
    )


FIXED_BASES = [c.algebra for c in CATALOG.values()] + [
    LieAlgebra.from_brackets({(1, 2): {2: 1}, (3, 4): {4: 1}}),  # aff(R) + aff(R)
    LieAlgebra.from_brackets({(1, 2): {3: 1}}),  # heisenberg + R
    LieAlgebra.from_brackets({(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}}),  # sl(2) + R
    LieAlgebra.from_brackets({(1, 2): {3: 1}, (1, 3): {4: 1}}),  # filiform
]


def quaternionic(a, b, c, d):
    """Commutes with J1, J2, J3; invertible unless a = b = c = d = 0."""
    return Matrix4([[d, -c, b, -a], [c, d, -a, -b], [-b, a, d, -c], [a, b, c, d]])


def _safe_change(alg, A):
    try:
        return change_basis(alg, A)
    except DegenerateError:
        return None


def fuzzed_algebras(n=120, seed=20140101):
    """Deterministic list of ``n`` valid algebras."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        if rng.random() < 0.3:
            base = semidirect([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
        else:
            base = rng.choice(FIXED_BASES)
        if rng.random() < 0.5:
            q = [rng.randint(-2, 2) for _ in range(4)]
            if not any(q):
                continue
            A = quaternionic(*q)
        else:
            A = Matrix4([[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)])
        alg = _safe_change(base, A)
        if alg is not None:
            out.append(alg)
    return out


small = st.integers(-2, 2)


@st.composite
def lie_algebras(draw):
    if draw(st.booleans()):
        base = semidirect(draw(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3)))
    else:
        base = draw(st.sampled_from(FIXED_BASES))
    if draw(st.booleans()):
        q = draw(st.lists(small, min_size=4, max_size=4))
        assume(any(q))
        A = quaternionic(*q)
    else:
        A = Matrix4(draw(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4)))
    alg = _safe_change(base, A)
    assume(alg is not None)
    return alg


@st.composite
def integrable_lie_algebras(draw):
    base = draw(st.sampled_from([c.algebra for c in CATALOG.values()]))
    q = draw(st.lists(small, min_size=4, max_size=4))
    assume(any(q))
    return change_basis(base, quaternionic(*q))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
