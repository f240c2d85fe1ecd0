"""Machine (JSON-ready dict) and text renderings of a classification."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .classify import ClassificationReport
from .hnstruct import check_compatibility, check_quaternionic
from .liealg import center, derived_algebra, validate
from .oracle import OracleReport

SCHEMA_VERSION = 1


def _q(x: Fraction) -> str:
    return str(x)


def _labels(d: dict) -> dict:
    return {"".join(map(str, k)): _q(v) for k, v in sorted(d.items())}


def load_schema() -> dict:
    return json.loads(resources.files("hnlie").joinpath("report.schema.json").read_text())


def build_report(rep: ClassificationReport, name: str | None = None, oracle: OracleReport | None = None) -> dict:
    """Deterministic, float-free dictionary; key order is fixed by construction."""
    alg, H = rep.algebra, rep.structure
    v = validate(alg)
    q = check_quaternionic(H.J)
    c = check_compatibility(H)
    herm = rep.hermitian
    out = {
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "brackets": {
            f"{i},{j}": {str(k): _q(x) for k, x in terms.items()}
            for (i, j), terms in alg.brackets().items()
        },
        "metric": [[_q(x) for x in row] for row in H.g.matrix],
        "validation": {"ok": v.ok, "violations": v.messages()},
        "quaternionic": {"ok": q.ok, "failures": list(q.failures)},
        "compatibility": {"ok": c.ok, "failures": list(c.failures)},
        "integrable": rep.integrable,
        "abelian": rep.abelian_structure,
        "derived_algebra_dim": derived_algebra(alg).dimension,
        "center_dim": center(alg).dimension,
        "gamma_table": {
            f"{i},{j}": {str(k): _q(x) for k, x in sorted(terms.items())}
            for (i, j), terms in sorted(rep.connection.table().items())
        },
        "F_tables": {f"F{F.alpha}": _labels(F.F.nonzero()) for F in rep.F},
        "lee_forms": {f"theta{t.alpha}": [_q(x) for x in t.theta] for t in rep.lee_forms},
        "norms": {f"J{a + 1}": _q(n) for a, n in enumerate(rep.norms)},
        "class_flags": {
            "J1": {"W0": herm.is_W0, "W2": herm.is_W2, "W4": herm.is_W4},
            **{
                f"J{n.alpha}": {
                    "W0": n.is_W0,
                    "W1": n.is_W1,
                    "W2": n.is_W2,
                    "W3": n.is_W3,
                    "W1+W2": n.is_W1plusW2,
                }
                for n in rep.norden
            },
        },
        "combined_label": rep.combined_label.value,
        "titaJ": rep.titaJ_satisfied,
        "d_theta1J1_zero": rep.d_theta1J1_zero,
        "hyperkaehler": rep.is_hyperkaehler,
        "isotropic_hyperkaehler": rep.is_isotropic_hyperkaehler,
        "flat": rep.flat,
    }
    if oracle is not None:
        out["oracle"] = {
            "ok": oracle.ok,
            "checks": oracle.checks,
            "norms_oracle": [_q(n) for n in oracle.norms_oracle],
        }
    return out


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False)


def render_text(rep: ClassificationReport, name: str | None = None, oracle: OracleReport | None = None) -> str:
    d = build_report(rep, name, oracle)
    lines = []
    title = f"case {name}" if name else "algebra"
    lines.append(f"{title}: {rep.combined_label.pretty}  [{rep.combined_label.value}]")
    br = ", ".join(
        f"[e{ij[0]},e{ij[-1]}]=" + " + ".join(f"{x} e{k}" for k, x in t.items())
        for ij, t in d["brackets"].items()
    ) or "(abelian)"
    lines.append(f"  brackets: {br}")
    lines.append(
        f"  dim g' = {d['derived_algebra_dim']}, dim z = {d['center_dim']}, "
        f"integrable = {rep.integrable}, abelian structure = {rep.abelian_structure}"
    )
    lines.append("  connection (nabla_{e_i} e_j):")
    if not d["gamma_table"]:
        lines.append("    all zero")
    for ij, terms in d["gamma_table"].items():
        i, j = ij.split(",")
        rhs = " + ".join(f"({x}) e{k}" for k, x in terms.items())
        lines.append(f"    nabla_e{i} e{j} = {rhs}")
    for F in rep.F:
        entries = ", ".join(f"{k}={v}" for k, v in d["F_tables"][f"F{F.alpha}"].items())
        lines.append(f"  F{F.alpha}: {entries or '0'}")
    for t in rep.lee_forms:
        lines.append(f"  theta{t.alpha} = ({', '.join(map(str, t.theta))})")
    lines.append("  |nabla J|^2 = " + ", ".join(f"{k}: {v}" for k, v in d["norms"].items()))
    for J, flags in d["class_flags"].items():
        on = [k for k, v in flags.items() if v]
        lines.append(f"  {J} classes: {', '.join(on) if on else 'none'}")
    lines.append(
        f"  theta-J relation: {rep.titaJ_satisfied}, d(theta1 o J1) = 0: {rep.d_theta1J1_zero}, "
        f"hyper-Kaehler: {rep.is_hyperkaehler}, isotropic: {rep.is_isotropic_hyperkaehler}, "
        f"flat: {rep.flat}"
    )
    if oracle is not None:
        checks = ", ".join(f"{k}={'ok' if v else 'MISMATCH'}" for k, v in oracle.checks.items())
        lines.append(f"  oracle: {checks}")
    return "\n".join(lines)
