"""Twisted cohomology H^0 and H^1 of a finitely presented group.

For a presentation <x_1..x_n | R_1..R_m> and a representation rho, with
coefficients in a Lie algebra g of dimension d under Ad o rho:

* the coboundary matrix stacks Ad(rho(x_i)) - I, shape (n d) x d;
* the cocycle matrix has block (j, i) = Ad rho(dR_j / dx_i), shape (m d) x (n d).

Then dim Z^1 = n d - rank(cocycle), dim B^1 = rank(coboundary) = d - dim H^0
and dim H^1 = dim Z^1 - dim B^1.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import NotARepresentationError
from .exactla import FMatrix, block_matrix, rank, vstack
from .exactla import QuatMatrix
from .lie import (
    LieBasis,
    Representation,
    centralizer_dimension,
    evaluate_ad,
    evaluate_word_matrix,
    lie_basis,
)
from .words import Presentation, abelianization, describe_abelian, fox_derivative


@dataclass
class CohomologyReport:
    flavor: str
    d: int
    n: int
    m: int
    h0: int
    z1: int
    b1: int
    h1: int
    cocycle_rank: int
    coboundary_rank: int
    split: Optional[dict] = None
    centralizers: dict = field(default_factory=dict)
    abelianization: Optional[dict] = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def verify_relators(rho: Representation, p: Presentation):
    """Raise unless every relator maps to the identity matrix."""
    identity = QuatMatrix.identity()
    for j, r in enumerate(p.relators):
        if evaluate_word_matrix(r, rho) != identity:
            raise NotARepresentationError(
                f"relator {j} ({p.format(r)}) does not map to the identity"
            )


def coboundary_matrix(rho: Representation, B: LieBasis) -> FMatrix:
    identity = FMatrix.identity(B.dim)
    return vstack([B.adjoint(g) - identity for g in rho.images])


def cocycle_matrix(rho: Representation, B: LieBasis, p: Presentation) -> FMatrix:
    verify_relators(rho, p)
    if not p.relators:
        return FMatrix(0, p.n * B.dim, [])
    blocks = [
        [evaluate_ad(fox_derivative(i, r), rho, B) for i in range(p.n)]
        for r in p.relators
    ]
    return block_matrix(blocks)


def h0_dimension(rho: Representation, B: LieBasis) -> int:
    return B.dim - rank(coboundary_matrix(rho, B))


def _dims(rho, B, p):
    d, n = B.dim, p.n
    cob_rank = rank(coboundary_matrix(rho, B))
    h0 = d - cob_rank
    coc_rank = rank(cocycle_matrix(rho, B, p))
    z1 = n * d - coc_rank
    b1 = d - h0
    if b1 != cob_rank:
        raise AssertionError("dim B^1 cross-check failed")
    return h0, z1, b1, z1 - b1, coc_rank, cob_rank


def h1_dimension(rho: Representation, B: LieBasis, p: Presentation,
                 split: bool = True) -> CohomologyReport:
    """Full cohomology report for one Lie algebra flavor.

    When B is sp(2,1) and every image has complex entries, Ad preserves
    the u(2,1) + m decomposition and H^1 is also computed on each block.
    """
    h0, z1, b1, h1, coc_rank, cob_rank = _dims(rho, B, p)
    factors, free_rank = abelianization(p)
    report = CohomologyReport(
        flavor=B.flavor, d=B.dim, n=p.n, m=p.m,
        h0=h0, z1=z1, b1=b1, h1=h1,
        cocycle_rank=coc_rank, coboundary_rank=cob_rank,
        abelianization={
            "invariant_factors": list(factors),
            "free_rank": free_rank,
            "group": describe_abelian(factors, free_rank),
        },
    )
    report.centralizers = {
        name: centralizer_dimension(g, B) for name, g in zip(rho.generators, rho.images)
    }
    report.notes.append("dim H^1 is the Zariski tangent dimension of the character variety at [rho]")
    if B.flavor == "sp21" and split:
        if rho.is_complex:
            h1_u = _dims(rho, lie_basis(B.form, "u21"), p)[3]
            h1_m = _dims(rho, lie_basis(B.form, "m"), p)[3]
            if h1_u + h1_m != h1:
                raise AssertionError("H^1 split does not add up")
            report.split = {"u21": h1_u, "m": h1_m}
            if h1_m == 0:
                report.notes.append(
                    "H^1 with coefficients in m vanishes: no first-order deformations leave U(2,1)"
                )
            else:
                report.notes.append(
                    f"H^1 with coefficients in m has dimension {h1_m}: "
                    "first-order deformations outside U(2,1) exist"
                )
        else:
            report.notes.append("split omitted: some image has non-complex entries")
    return report
