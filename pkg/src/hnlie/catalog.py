"""Built-in Lie algebras carrying the standard hypercomplex structure, with the
tabulated results they are expected to reproduce.

Tables are transcribed as equality chains, the way they are usually printed:
``_chain("1/2", "314", "-323")`` reads ``F_314 = -F_323 = 1/2``, and a label
``"-2*322"`` means ``-2 F_322`` equals the chain value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .classify import ClassLabel
from .exact import Matrix4, as_rational
from .liealg import LieAlgebra, change_basis

Q = Fraction


def _coef_label(label: str) -> tuple[Fraction, str]:
    if "*" in label:
        coef, rest = label.split("*")
        return as_rational(coef), rest
    if label.startswith("-"):
        return Q(-1), label[1:]
    return Q(1), label


def _chain(value, *labels: str) -> dict[tuple[int, ...], Fraction]:
    value = as_rational(value)
    out = {}
    for lab in labels:
        coef, idx = _coef_label(lab)
        out[tuple(int(ch) for ch in idx)] = value / coef
    return out


def _merge(*parts: dict) -> dict:
    out: dict = {}
    for p in parts:
        for k, v in p.items():
            if k in out and out[k] != v:
                raise ValueError(f"conflicting transcription for {k}")
            out[k] = v
    return out


def _nabla(k: int, value, *pairs: str) -> dict[tuple[int, int, int], Fraction]:
    """``nabla_{e_i} e_j = c e_k`` entries, chained like :func:`_chain`."""
    return {(i, j, k): v for (i, j), v in _chain(value, *pairs).items()}


@dataclass(frozen=True)
class Expected:
    """What the printed tables state about a case; nothing more."""

    label: ClassLabel
    # stated class puts J2, J3 in neither W1 nor W2
    norden_not_W1_nor_W2: bool = False
    connection: dict | None = None  # {(i, j, k): coeff}
    F: dict = field(default_factory=dict)  # alpha -> {(i, j, k): value}
    F_zero: tuple[int, ...] = ()
    lee: dict | None = None  # alpha -> {i: value}; None when not printed


@dataclass(frozen=True)
class CatalogCase:
    name: str
    barberis_type: str
    algebra: LieAlgebra
    description: str
    derived_dim: int
    derived_kind: str  # "zero", "so3", "2d", "abelian", "heisenberg"
    expected: Expected


HC2A = LieAlgebra.from_brackets({(2, 4): {3: 1}, (4, 3): {2: 1}, (3, 2): {4: 1}})

# e1 <-> e3: the R-factor moves to the (-)-unit e3, the standard J stays fixed.
HC2B_RELABEL = Matrix4([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]])

_CASES = [
    CatalogCase(
        "hc1",
        "hc1",
        LieAlgebra.abelian(),
        "Abelian algebra R^4",
        0,
        "zero",
        Expected(ClassLabel.K, F_zero=(1, 2, 3), lee={1: {}, 2: {}, 3: {}}),
    ),
    CatalogCase(
        "hc2a",
        "hc2",
        HC2A,
        "R + so(3), R-factor spanned by the (+)-unit e1",
        3,
        "so3",
        Expected(
            ClassLabel.H_PROPER,
            norden_not_W1_nor_W2=True,
            connection=_merge(
                _nabla(4, "-3/2", "23"),
                _nabla(4, "-1/2", "32"),
                _nabla(3, "1/2", "42"),
                _nabla(3, "3/2", "24"),
                _nabla(2, "-1/2", "34"),
                _nabla(2, "1/2", "43"),
            ),
            F={
                1: _chain("1/2", "314", "-323", "332", "-341", "-413", "-424", "431", "442"),
                2: _merge(
                    _chain("3/2", "214", "-223", "-232", "241"),
                    _chain(-1, "322"),
                    _chain("1/2", "412", "421", "434", "443"),
                    _chain(-1, "344"),
                ),
                3: _merge(
                    _chain("3/2", "213", "224", "231", "242"),
                    _chain(1, "422"),
                    _chain("1/2", "312", "321", "-334", "-343"),
                    _chain(1, "433"),
                ),
            },
            lee={1: {2: Q(-1)}, 2: {3: Q(-2)}, 3: {4: Q(2)}},
        ),
    ),
    CatalogCase(
        "hc2b",
        "hc2",
        change_basis(HC2A, HC2B_RELABEL),
        "R + so(3), R-factor spanned by the (-)-unit e3 (hc2a with e1 and e3 swapped)",
        3,
        "so3",
        Expected(ClassLabel.H_PROPER, norden_not_W1_nor_W2=True),
    ),
    CatalogCase(
        "hc3a",
        "hc3",
        LieAlgebra.from_brackets({(2, 3): {2: 1}, (1, 4): {2: 1}, (2, 1): {4: 1}, (4, 3): {4: 1}}),
        "aff(C), metric of signature (1,1) on the derived algebra",
        2,
        "2d",
        Expected(
            ClassLabel.KAEHLER_J1,
            norden_not_W1_nor_W2=True,
            connection=_merge(
                _nabla(4, 1, "21", "43"),
                _nabla(3, 1, "22", "-44"),
                _nabla(2, 1, "23", "-41"),
                _nabla(1, 1, "24", "42"),
            ),
            F={
                2: _chain(2, "212", "221", "234", "243", "-414", "423", "432", "-441"),
                3: _chain(-2, "211", "-222", "-233", "244", "413", "424", "431", "442"),
            },
            F_zero=(1,),
            lee={1: {}, 2: {1: Q(4)}, 3: {2: Q(4)}},
        ),
    ),
    CatalogCase(
        "hc3b",
        "hc3",
        LieAlgebra.from_brackets({(1, 3): {1: 1}, (4, 2): {1: 1}, (1, 4): {2: 1}, (2, 3): {2: 1}}),
        "aff(C), metric of signature (2,0) on the derived algebra",
        2,
        "2d",
        Expected(
            ClassLabel.W_CONFORMAL,
            connection=_merge(
                _nabla(3, 1, "11", "22"),
                _nabla(2, 1, "23", "-41"),
                _nabla(1, 1, "13", "42"),
            ),
            F={
                1: _chain(-1, "114", "-123", "132", "-141", "213", "224", "-231", "-242"),
                2: _merge(
                    _chain(2, "111", "133"),
                    _chain(1, "212", "221", "234", "243", "-414", "423", "432", "-441"),
                ),
                3: _merge(
                    _chain(2, "222", "233"),
                    _chain(-1, "-112", "-121", "134", "143", "413", "424", "431", "442"),
                ),
            },
            lee={1: {4: Q(-2)}, 2: {1: Q(4)}, 3: {2: Q(4)}},
        ),
    ),
    CatalogCase(
        "hc4a",
        "hc4",
        LieAlgebra.from_brackets({(1, 2): {2: 1}, (1, 3): {3: 1}, (1, 4): {4: 1}}),
        "solvable algebra of RH^4, (+)-unit e1 orthogonal to the derived algebra",
        3,
        "abelian",
        Expected(
            ClassLabel.H_PROPER,
            norden_not_W1_nor_W2=True,
            connection=_merge(
                _nabla(2, -1, "21"),
                _nabla(3, -1, "31"),
                _nabla(4, -1, "41"),
                _nabla(1, 1, "22", "-33", "-44"),
            ),
            F={
                1: _chain(1, "314", "-323", "332", "-341", "-413", "-424", "431", "442"),
                2: _merge(
                    _chain(-2, "311", "333"),
                    _chain(-1, "214", "-223", "-232", "241", "412", "421", "434", "443"),
                ),
                3: _merge(
                    _chain(2, "411", "444"),
                    _chain(-1, "213", "224", "231", "242", "312", "321", "-334", "-343"),
                ),
            },
            # printed as (theta1)_2 = -(theta2)_3 = (theta3)_4 = -2
            lee={1: {2: Q(-2)}, 2: {3: Q(2)}, 3: {4: Q(-2)}},
        ),
    ),
    CatalogCase(
        "hc4b",
        "hc4",
        LieAlgebra.from_brackets({(4, 1): {1: 1}, (4, 2): {2: 1}, (4, 3): {3: 1}}),
        "solvable algebra of RH^4, (-)-unit e4 orthogonal to the derived algebra",
        3,
        "abelian",
        Expected(
            ClassLabel.W_CONFORMAL,
            connection=_merge(
                _nabla(4, -1, "11", "22", "-33"),
                _nabla(1, -1, "14"),
                _nabla(2, -1, "24"),
                _nabla(3, -1, "34"),
            ),
            F={
                1: _chain(-1, "113", "124", "-131", "-142", "-214", "223", "-232", "241"),
                2: _merge(
                    _chain(-2, "222", "244"),
                    _chain(-1, "112", "121", "134", "143", "314", "-323", "-332", "341"),
                ),
                3: _merge(
                    _chain(2, "111", "144"),
                    _chain(-1, "-212", "-221", "234", "243", "313", "324", "331", "342"),
                ),
            },
            lee={1: {3: Q(-2)}, 2: {2: Q(-4)}, 3: {1: Q(4)}},
        ),
    ),
    CatalogCase(
        "hc5a",
        "hc5",
        LieAlgebra.from_brackets(
            {(1, 2): {2: 1}, (1, 3): {3: Q(1, 2)}, (1, 4): {4: Q(1, 2)}, (3, 4): {2: Q(1, 2)}}
        ),
        "solvable algebra of CH^2, (+)-unit e1 orthogonal to the Heisenberg derived algebra",
        3,
        "heisenberg",
        Expected(
            ClassLabel.H_PROPER,
            norden_not_W1_nor_W2=True,
            connection=_merge(
                _nabla(1, 1, "22", "-2*33", "-2*44"),
                _nabla(2, 1, "-21", "4*34", "-4*43"),
                _nabla(3, 1, "-4*24", "-2*31", "-4*42"),
                _nabla(4, 1, "4*23", "4*32", "-2*41"),
            ),
            F={
                1: _chain("1/4", "314", "-323", "332", "-341", "-413", "-424", "431", "442"),
                2: _merge(
                    _chain("-5/4", "214", "-223", "-232", "241"),
                    _chain(-1, "311", "-2*322", "333", "-2*344"),
                    _chain("-3/4", "412", "421", "434", "443"),
                ),
                3: _merge(
                    _chain("-5/4", "213", "224", "231", "242"),
                    _chain("-3/4", "312", "321", "-334", "-343"),
                    _chain(1, "411", "-2*422", "-2*433", "444"),
                ),
            },
            lee={1: {2: Q(-1, 2)}, 2: {3: Q(3)}, 3: {4: Q(-3)}},
        ),
    ),
    CatalogCase(
        "hc5b",
        "hc5",
        LieAlgebra.from_brackets(
            {(1, 2): {3: Q(-1, 2)}, (1, 4): {1: Q(-1, 2)}, (2, 4): {2: Q(-1, 2)}, (3, 4): {3: -1}}
        ),
        "solvable algebra of CH^2, (-)-unit e4 orthogonal to the Heisenberg derived algebra",
        3,
        "heisenberg",
        Expected(ClassLabel.H_PROPER, norden_not_W1_nor_W2=True),
    ),
]

CATALOG: dict[str, CatalogCase] = {c.name: c for c in _CASES}


def get_case(name: str) -> CatalogCase:
    try:
        return CATALOG[name]
    except KeyError:
        known = ", ".join(CATALOG)
        raise KeyError(f"unknown catalog case {name!r} (known: {known})") from None


def list_cases() -> list[tuple[str, str]]:
    return [(c.name, c.description) for c in _CASES]
