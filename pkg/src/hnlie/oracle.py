"""Brute-force cross-checks, written with plain index loops over the raw
structure constants so they share no code path with the engine."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connection import Connection, levi_civita, square_norm_nabla_J
from .exact import RANGE
from .hnstruct import HNStructure, nijenhuis
from .liealg import LieAlgebra

R4 = list(RANGE)


def brute_bracket(c, x, y):
    return [sum(x[i] * y[j] * c[i, j, k] for i in R4 for j in R4) for k in R4]


def brute_apply(J, v):
    return [sum(J[m][n] * v[n] for n in R4) for m in R4]


def brute_g(G, x, y):
    return sum(x[i] * G[i][j] * y[j] for i in R4 for j in R4)


def unit(i):
    return [Fraction(int(k == i)) for k in R4]


def nabla_J_entry(conn: Connection, J, i, k):
    """(nabla_{e_i} J) e_k by explicit sums over the Christoffel table."""
    gm = conn.gamma
    Jek = [J[m][k] for m in R4]
    nabla_Jek = [sum(Jek[j] * gm[i, j, m] for j in R4) for m in R4]
    nabla_ek = [gm[i, k, m] for m in R4]
    return [nabla_Jek[m] - sum(J[m][n] * nabla_ek[n] for n in R4) for m in R4]


def norm_oracle(conn: Connection, J, H: HNStructure) -> Fraction:
    """Sum all 256 terms g^{ij} g^{kl} g((nabla_i J) e_k, (nabla_j J) e_l)."""
    G, Gi = H.g.matrix, H.g.inverse
    A = {(i, k): nabla_J_entry(conn, J, i, k) for i in R4 for k in R4}
    total = Fraction(0)
    for i in R4:
        for j in R4:
            for k in R4:
                for l in R4:
                    total += Gi[i][j] * Gi[k][l] * brute_g(G, A[i, k], A[j, l])
    return total


def nijenhuis_oracle(alg: LieAlgebra, J) -> dict:
    c = alg.constants
    out = {}
    for i in R4:
        for j in R4:
            x, y = unit(i), unit(j)
            Jx, Jy = brute_apply(J, x), brute_apply(J, y)
            t1 = brute_bracket(c, Jx, Jy)
            t2 = brute_apply(J, brute_bracket(c, Jx, y))
            t3 = brute_apply(J, brute_bracket(c, x, Jy))
            t4 = brute_bracket(c, x, y)
            out[i, j] = [t1[k] - t2[k] - t3[k] - t4[k] for k in R4]
    return out


def koszul_residuals(alg: LieAlgebra, conn: Connection, H: HNStructure) -> list:
    """Triples (i, j, k) where the Christoffel table fails the Koszul identity."""
    c, G, gm = alg.constants, H.g.matrix, conn.gamma
    bad = []
    for i in R4:
        for j in R4:
            for k in R4:
                lhs = 2 * brute_g(G, [gm[i, j, m] for m in R4], unit(k))
                rhs = (
                    brute_g(G, brute_bracket(c, unit(i), unit(j)), unit(k))
                    - brute_g(G, brute_bracket(c, unit(j), unit(k)), unit(i))
                    + brute_g(G, brute_bracket(c, unit(k), unit(i)), unit(j))
                )
                if lhs != rhs:
                    bad.append((i + 1, j + 1, k + 1))
    return bad


@dataclass(frozen=True)
class OracleReport:
    norms_engine: tuple[Fraction, ...]
    norms_oracle: tuple[Fraction, ...]
    nijenhuis_match: tuple[bool, ...]
    koszul_failures: tuple[tuple[int, int, int], ...]

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "square_norms": self.norms_engine == self.norms_oracle,
            "nijenhuis": all(self.nijenhuis_match),
            "koszul": not self.koszul_failures,
        }

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def run_oracles(alg: LieAlgebra, H: HNStructure) -> OracleReport:
    conn = levi_civita(alg, H.g)
    engine = tuple(square_norm_nabla_J(conn, J, H.g) for J in H.J)
    brute = tuple(norm_oracle(conn, J, H) for J in H.J)
    nij = []
    for J in H.J:
        N = nijenhuis(alg, J)
        ref = nijenhuis_oracle(alg, J)
        nij.append(all(list(N.vector(i, j)) == ref[i, j] for i in R4 for j in R4))
    return OracleReport(engine, brute, tuple(nij), tuple(koszul_residuals(alg, conn, H)))
