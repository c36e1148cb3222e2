"""Deterministic JSON and text encodings for the package's value types.

All coefficients are serialized as decimal strings (unbounded integers);
object keys are emitted sorted so identical values produce byte-identical
encodings.
"""

from __future__ import annotations

import json
from typing import Any

from .colored import Partition, from_pairs, to_pairs
from .holonomic import QDiffOperator
from .laurent import LaurentPoly, RationalFunction
from .series import BiSeries, QSeries


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, no whitespace surprises, newline end."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def partition_to_json(parts: Partition) -> list:
    return to_pairs(parts)


def partition_from_json(data: list) -> Partition:
    return from_pairs((c, int(m)) for c, m in data)


def biseries_csv(s: BiSeries) -> str:
    """CSV rows x_exp,q_exp,coeff for all nonzero coefficients."""
    lines = ["x_exp,q_exp,coeff"]
    for m in sorted(s.slices):
        for i, c in enumerate(s.slices[m].coeffs):
            if c:
                lines.append(f"{m},{i},{c}")
    return "\n".join(lines) + "\n"


def qseries_csv(s: QSeries) -> str:
    lines = ["q_exp,coeff"]
    for i, c in enumerate(s.coeffs):
        if c:
            lines.append(f"{i},{c}")
    return "\n".join(lines) + "\n"


def ratfun_from_json(data: dict) -> RationalFunction:
    if "den" in data:
        return RationalFunction.from_json(data)
    return RationalFunction.from_poly(LaurentPoly.from_json(data))


def system_from_json(data: dict) -> tuple[list[list[RationalFunction]], int]:
    """A first-order system {"step": s, "matrix": [[entry, ...], ...]}."""
    step = int(data.get("step", 3))
    matrix = [[ratfun_from_json(e) for e in row] for row in data["matrix"]]
    return matrix, step


def system_to_json(matrix, step: int = 3) -> dict:
    return {"step": step, "matrix": [[e.to_json() for e in row] for row in matrix]}


def operator_to_json(op: QDiffOperator) -> dict:
    return op.to_json()


def operator_from_json(data: dict) -> QDiffOperator:
    return QDiffOperator.from_json(data)


# ----------------------------------------------------------------------
# certificates


def certificate_to_json(cert) -> dict:
    """Families as lists (index = power of N) of shift-term lists.

    Each shift term is [[j, k1, k2, k3], LaurentPoly] over
    (q, u, v1, v2, v3) with u = q^n, v_i = q^(k_i).
    """
    fams = {}
    for name, ops in cert.families.items():
        fams[name] = [
            [[list(s), p.to_json()] for s, p in sorted(op.terms.items())]
            for op in ops
        ]
    return {"order": cert.order, "families": fams, "product_mode": cert.product_mode}


def certificate_from_json(data: dict):
    from .holonomic import CertificateSet, ShiftOp

    fams = {}
    for name, ops in data["families"].items():
        fams[name] = [
            ShiftOp({tuple(s): LaurentPoly.from_json(p) for s, p in terms})
            for terms in ops
        ]
    return CertificateSet(int(data["order"]), fams, data.get("product_mode", "skew"))


def hypterm_from_json(data: dict):
    from .holonomic import HypTerm

    return HypTerm.from_json(data)
