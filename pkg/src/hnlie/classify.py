"""Class membership for the Hermitian structure J1 and the Norden structures J2, J3.

Every identity is multilinear, so it is tested on all 64 basis triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from .connection import (
    Connection,
    LeeForm,
    StructureTensor,
    compose_form_with_J,
    curvature,
    exterior_derivative_1form,
    lee_form,
    levi_civita,
    nabla_J,
    square_norm_nabla_J,
    structure_tensor,
)
from .exact import RANGE, Matrix4, Vector4
from .hnstruct import (
    HNStructure,
    IncompatibleStructureError,
    Metric,
    check_compatibility,
    check_quaternionic,
    is_abelian_structure,
    is_hypercomplex,
)
from .liealg import InvalidAlgebraError, LieAlgebra, validate

TRIPLES = tuple(product(RANGE, RANGE, RANGE))


class ClassLabel(Enum):
    """Smallest named class containing the structure, most specific first."""

    K = "K"
    W_CONFORMAL = "W^0"
    W = "W"
    KAEHLER_J1 = "W_0(J1)-H"
    H_PROPER = "H-proper"
    OUTSIDE_H = "outside-H"

    @property
    def pretty(self) -> str:
        return _PRETTY[self]


_PRETTY = {
    ClassLabel.K: "𝒦",
    ClassLabel.W_CONFORMAL: "𝒲⁰",
    ClassLabel.W: "𝒲",
    ClassLabel.KAEHLER_J1: "𝒲₀(J₁)∩(𝒲₁⊕𝒲₂)(J₂)∩(𝒲₁⊕𝒲₂)(J₃)",
    ClassLabel.H_PROPER: "ℋ",
    ClassLabel.OUTSIDE_H: "outside ℋ",
}


@dataclass(frozen=True)
class HermitianClassFlags:
    is_W0: bool
    is_W2: bool
    is_W4: bool


@dataclass(frozen=True)
class NordenClassFlags:
    alpha: int
    is_W0: bool
    is_W1: bool
    is_W2: bool
    is_W3: bool
    is_W1plusW2: bool


def _basis(J: Matrix4):
    e = [Vector4.basis(i) for i in RANGE]
    Je = [J.column(i) for i in RANGE]
    return e, Je


def classify_hermitian(F1: StructureTensor, theta1: LeeForm, g: Metric, J1: Matrix4) -> HermitianClassFlags:
    F, th = F1.F, theta1.theta
    e, Je = _basis(J1)
    thJ = compose_form_with_J(th, J1)
    G = g.matrix

    def w4_rhs(x, y, z):
        return (
            G[x][y] * th[z]
            - G[x][z] * th[y]
            - g(e[x], Je[y]) * thJ[z]
            + g(e[x], Je[z]) * thJ[y]
        ) / 2

    is_W0 = F.is_zero()
    is_W2 = all(F[x, y, z] + F[y, z, x] + F[z, x, y] == 0 for x, y, z in TRIPLES)
    is_W4 = all(F[x, y, z] == w4_rhs(x, y, z) for x, y, z in TRIPLES)
    return HermitianClassFlags(is_W0=is_W0, is_W2=is_W2, is_W4=is_W4)


def classify_norden(Fa: StructureTensor, thetaa: LeeForm, g: Metric, Ja: Matrix4) -> NordenClassFlags:
    F, th = Fa.F, thetaa.theta
    e, Je = _basis(Ja)
    thJ = compose_form_with_J(th, Ja)
    G = g.matrix

    def w1_rhs(x, y, z):
        return (
            G[x][y] * th[z]
            + G[x][z] * th[y]
            + g(e[x], Je[y]) * thJ[z]
            + g(e[x], Je[z]) * thJ[y]
        ) / 4

    # F(x, y, J z) for basis z, by linearity in the last slot
    FJ = {(x, y, z): sum((Je[z][m] * F[x, y, m] for m in RANGE), Fraction(0)) for x, y, z in TRIPLES}

    is_W0 = F.is_zero()
    is_W1 = all(F[x, y, z] == w1_rhs(x, y, z) for x, y, z in TRIPLES)
    cyclic_FJ = all(FJ[x, y, z] + FJ[y, z, x] + FJ[z, x, y] == 0 for x, y, z in TRIPLES)
    is_W2 = cyclic_FJ and th.is_zero()
    is_W3 = all(F[x, y, z] + F[y, z, x] + F[z, x, y] == 0 for x, y, z in TRIPLES)
    return NordenClassFlags(
        alpha=Fa.alpha,
        is_W0=is_W0,
        is_W1=is_W1,
        is_W2=is_W2,
        is_W3=is_W3,
        is_W1plusW2=cyclic_FJ,
    )


def check_titaJ(thetas, H: HNStructure) -> bool:
    """``theta2 o J2 = theta3 o J3 = -2 (theta1 o J1)`` componentwise."""
    t1, t2, t3 = (compose_form_with_J(t.theta, J) for t, J in zip(thetas, H.J))
    return t2 == t3 == t1 * -2


def hyperkaehler_checks(conn: Connection, H: HNStructure) -> tuple[bool, bool]:
    """(all nabla J_a vanish, all square norms vanish)."""
    hk = all(nabla_J(conn, J).is_zero() for J in H.J)
    iso = all(square_norm_nabla_J(conn, J, H.g) == 0 for J in H.J)
    return hk, iso


@dataclass(frozen=True)
class ClassificationReport:
    algebra: LieAlgebra
    structure: HNStructure
    connection: Connection
    F: tuple[StructureTensor, StructureTensor, StructureTensor]
    lee_forms: tuple[LeeForm, LeeForm, LeeForm]
    norms: tuple[Fraction, Fraction, Fraction]
    hermitian: HermitianClassFlags
    norden: tuple[NordenClassFlags, NordenClassFlags]
    combined_label: ClassLabel
    titaJ_satisfied: bool
    d_theta1J1_zero: bool
    is_hyperkaehler: bool
    is_isotropic_hyperkaehler: bool
    abelian_structure: bool
    integrable: bool
    flat: bool

    @property
    def in_H(self) -> bool:
        return self.combined_label is not ClassLabel.OUTSIDE_H

    @property
    def in_W(self) -> bool:
        """W4(J1) and W1(J2) and W1(J3)."""
        return self.hermitian.is_W4 and all(n.is_W1 for n in self.norden)


def combined_label(
    hermitian: HermitianClassFlags,
    norden: tuple[NordenClassFlags, NordenClassFlags],
    all_F_zero: bool,
    titaJ: bool,
    closed: bool,
) -> ClassLabel:
    if all_F_zero:
        return ClassLabel.K
    in_w = titaJ and hermitian.is_W4 and all(n.is_W1 for n in norden)
    if in_w:
        return ClassLabel.W_CONFORMAL if closed else ClassLabel.W
    both_complex = all(n.is_W1plusW2 for n in norden)
    if hermitian.is_W0 and both_complex:
        return ClassLabel.KAEHLER_J1
    if hermitian.is_W4 and both_complex:
        return ClassLabel.H_PROPER
    return ClassLabel.OUTSIDE_H


def classify(alg: LieAlgebra, H: HNStructure) -> ClassificationReport:
    """Run connection, structure tensors, Lee forms and class tests end to end.

    Raises :class:`InvalidAlgebraError` or :class:`IncompatibleStructureError`
    when the inputs fail their defining identities.
    """
    v = validate(alg)
    if not v.ok:
        raise InvalidAlgebraError(v)
    q = check_quaternionic(H.J)
    c = check_compatibility(H)
    if not (q.ok and c.ok):
        raise IncompatibleStructureError("; ".join(q.failures + c.failures))

    conn = levi_civita(alg, H.g)
    Fs = tuple(structure_tensor(conn, H.J[a], H.g, a + 1) for a in range(3))
    thetas = tuple(lee_form(F, H.g) for F in Fs)
    norms = tuple(square_norm_nabla_J(conn, J, H.g) for J in H.J)

    herm = classify_hermitian(Fs[0], thetas[0], H.g, H.J[0])
    nord = tuple(classify_norden(Fs[a], thetas[a], H.g, H.J[a]) for a in (1, 2))

    titaJ = check_titaJ(thetas, H)
    eta = compose_form_with_J(thetas[0].theta, H.J[0])
    closed = exterior_derivative_1form(eta, alg).is_zero()
    all_zero = all(F.F.is_zero() for F in Fs)

    return ClassificationReport(
        algebra=alg,
        structure=H,
        connection=conn,
        F=Fs,
        lee_forms=thetas,
        norms=norms,
        hermitian=herm,
        norden=nord,
        combined_label=combined_label(herm, nord, all_zero, titaJ, closed),
        titaJ_satisfied=titaJ,
        d_theta1J1_zero=closed,
        # F_a = g(nabla J_a ., .) with g nondegenerate, so F_a = 0 iff nabla J_a = 0
        is_hyperkaehler=all_zero,
        is_isotropic_hyperkaehler=all(n == 0 for n in norms),
        abelian_structure=is_abelian_structure(alg, H),
        integrable=bool(is_hypercomplex(alg, H)),
        flat=curvature(conn, alg).is_flat,
    )
