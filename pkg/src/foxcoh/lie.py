"""Invariant forms, Lie algebra bases and adjoint matrices.

Quaternion matrices are realified with coordinates (w, x, y, z) per entry,
row-major, 36 real coordinates for a 3x3 matrix. A Lie algebra element X
of sp(2,1) with respect to a Hermitian form J satisfies X* J + J X = 0.

Flavors:

* ``sp21`` - all of sp(2,1), dimension 21. Ordered as the u21 basis
  followed by the m basis, so ``split == 9``.
* ``u21``  - complex entries, dimension 9.
* ``su21`` - complex entries and trace zero, dimension 8.
* ``m``    - entries in span{j, k}, dimension 12; the complement of
  u(2,1), isomorphic to S^2 C^3 as a real module.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .errors import (
    AmbiguousFormError,
    DegenerateFormError,
    NoInvariantFormError,
    NotInGroupError,
    SubspaceNotPreservedError,
)
from .exactla import (
    FMatrix,
    LinearSolver,
    QuatMatrix,
    complex_inverse3,
    hermitian_signature,
    kernel_basis,
    rank,
)
from .field import ONE, QI, QJ, QK, QONE, QZERO, ZERO, FieldElement, Quaternion
from .words import FreeWord, GroupRingElement

FLAVORS = ("sp21", "u21", "su21", "m")
DIMENSIONS = {"sp21": 21, "u21": 9, "su21": 8, "m": 12}

_UNITS = (QONE, QI, QJ, QK)


class HermitianForm:
    """Complex Hermitian 3x3 form of signature (2, 1)."""

    def __init__(self, J: QuatMatrix):
        sig = hermitian_signature(J)
        if sig != (2, 1):
            raise DegenerateFormError(f"form has signature {sig}, expected (2, 1)")
        self.J = J
        self.J_inv = complex_inverse3(J)
        self.signature = sig

    def preserves(self, g: QuatMatrix) -> bool:
        return g.star @ self.J @ g == self.J

    def group_inverse(self, g: QuatMatrix) -> QuatMatrix:
        """g^-1 = J^-1 g* J, valid whenever g* J g = J."""
        return self.J_inv @ g.star @ self.J

    def scaled(self, c) -> HermitianForm:
        return HermitianForm(self.J.scale(FieldElement.coerce(c)))

    def __eq__(self, other):
        return isinstance(other, HermitianForm) and self.J == other.J

    def __hash__(self):
        return hash(self.J)

    def __repr__(self):
        return f"HermitianForm({self.J!r})"


def _hermitian_basis():
    """Real basis of complex Hermitian 3x3 matrices (9 elements)."""
    out = []
    for i in range(3):
        out.append(_unit_matrix(i, i, QONE))
    for i in range(3):
        for j in range(i + 1, 3):
            out.append(_unit_matrix(i, j, QONE) + _unit_matrix(j, i, QONE))
            out.append(_unit_matrix(i, j, QI) + _unit_matrix(j, i, -QI))
    return out


def _unit_matrix(i, j, q):
    rows = [[QZERO] * 3 for _ in range(3)]
    rows[i][j] = q
    return QuatMatrix(rows)


def derive_invariant_form(mats: Sequence[QuatMatrix]) -> HermitianForm:
    """The unique (up to scale) complex Hermitian J with g* J g = J for all g.

    Normalized to signature (2, 1) and scaled by a positive rational so
    that the first nonzero real coordinate (row-major) is +1 or -1.
    """
    for g in mats:
        if not g.is_complex():
            raise ValueError("derive_invariant_form needs complex-entry matrices")
    basis = _hermitian_basis()
    columns = []
    for H in basis:
        col = []
        for g in mats:
            col.extend((g.star @ H @ g - H).real_coords())
        columns.append(col)
    nrows = len(columns[0]) if mats else 0
    system = FMatrix.from_columns(columns, nrows) if nrows else FMatrix(0, len(basis), [])
    kernel = kernel_basis(system)
    if not kernel:
        raise NoInvariantFormError("no invariant Hermitian form")
    if len(kernel) > 1:
        raise AmbiguousFormError(
            f"invariant Hermitian forms span a {len(kernel)}-dimensional space; "
            "give the form explicitly"
        )
    (t,) = kernel
    J = _combine(basis, t)
    sig = hermitian_signature(J)
    if sig == (1, 2):
        J = -J
    elif sig != (2, 1):
        raise DegenerateFormError(f"invariant form has signature {sig}")
    lead = next(c for c in J.real_coords() if not c.is_zero())
    scale = abs(lead).inverse()
    return HermitianForm(J.scale(scale))


def _combine(mats, coeffs) -> QuatMatrix:
    acc = None
    for M, c in zip(mats, coeffs):
        if c.is_zero():
            continue
        term = M.scale(c)
        acc = term if acc is None else acc + term
    return acc if acc is not None else QuatMatrix.identity().scale(ZERO)


class LieBasis:
    """Ordered real basis of a Lie subalgebra of sp(2,1)."""

    def __init__(self, flavor: str, elements: Sequence[QuatMatrix], form: HermitianForm,
                 split: Optional[int] = None):
        self.flavor = flavor
        self.elements = list(elements)
        self.form = form
        self.split = split
        coords = FMatrix.from_columns([X.real_coords() for X in self.elements], 36)
        self._solver = LinearSolver(coords)  # raises if dependent
        self._adjoint_cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def coordinates(self, X: QuatMatrix) -> Optional[list]:
        """Coordinates of X in this basis, or None if X is outside the span."""
        return self._solver.solve(X.real_coords())

    def element(self, coords: Sequence) -> QuatMatrix:
        return _combine(self.elements, [FieldElement.coerce(c) for c in coords])

    def permuted(self, order: Sequence[int]) -> LieBasis:
        return LieBasis(self.flavor, [self.elements[i] for i in order], self.form)

    def adjoint(self, g: QuatMatrix) -> FMatrix:
        cached = self._adjoint_cache.get(g)
        if cached is None:
            cached = adjoint_matrix(g, self)
            self._adjoint_cache[g] = cached
        return cached

    def __repr__(self):
        return f"LieBasis({self.flavor}, dim={self.dim})"


def _coordinate_indices(flavor):
    if flavor in ("u21", "su21"):
        parts = (0, 1)
    elif flavor == "m":
        parts = (2, 3)
    else:
        parts = (0, 1, 2, 3)
    return [4 * e + p for e in range(9) for p in parts]


def _solve_lie_algebra(J: QuatMatrix, flavor: str) -> list:
    unknowns = _coordinate_indices(flavor)
    columns = []
    for idx in unknowns:
        e, p = divmod(idx, 4)
        E = _unit_matrix(e // 3, e % 3, _UNITS[p])
        col = (E.star @ J + J @ E).real_coords()
        if flavor == "su21":
            # trace(X) = 0: sum of w and x parts of the diagonal
            diag = e in (0, 4, 8)
            col = col + [ONE if diag and p == 0 else ZERO, ONE if diag and p == 1 else ZERO]
        columns.append(col)
    system = FMatrix.from_columns(columns, len(columns[0]))
    out = []
    for v in kernel_basis(system):
        full = [ZERO] * 36
        for idx, c in zip(unknowns, v):
            full[idx] = c
        out.append(QuatMatrix.from_real_coords(full))
    return out


def lie_basis(form: HermitianForm, flavor: str) -> LieBasis:
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}; choose from {FLAVORS}")
    J = form.J
    if flavor == "sp21":
        u = _solve_lie_algebra(J, "u21")
        m = _solve_lie_algebra(J, "m")
        basis = LieBasis("sp21", u + m, form, split=len(u))
        full = _solve_lie_algebra(J, "sp21")
        if len(full) != basis.dim:
            raise AssertionError("u(2,1) + m does not exhaust sp(2,1)")
    else:
        basis = LieBasis(flavor, _solve_lie_algebra(J, flavor), form)
    if basis.dim != DIMENSIONS[flavor]:
        raise AssertionError(f"{flavor} basis has {basis.dim} elements")
    return basis


def adjoint_matrix(g: QuatMatrix, B: LieBasis) -> FMatrix:
    """Matrix of X -> g X g^-1 in the basis B (columns are images)."""
    form = B.form
    if not form.preserves(g):
        raise NotInGroupError("matrix does not preserve the Hermitian form (g* J g != J)")
    g_inv = form.group_inverse(g)
    columns = []
    for X in B.elements:
        c = B.coordinates(g @ X @ g_inv)
        if c is None:
            raise SubspaceNotPreservedError(
                f"conjugation does not preserve the {B.flavor} subspace"
            )
        columns.append(c)
    return FMatrix.from_columns(columns, B.dim)


def bracket(X: QuatMatrix, Y: QuatMatrix) -> QuatMatrix:
    return X @ Y - Y @ X


class Representation:
    """Images of the generators of a free group in Sp(2,1)."""

    def __init__(self, generators: Sequence[str], images: Mapping[str, QuatMatrix],
                 form: HermitianForm, zariski_dense: bool = False):
        missing = [g for g in generators if g not in images]
        if missing:
            raise ValueError(f"no image for generator(s) {missing}")
        self.generators = list(generators)
        self.images = [images[g] for g in self.generators]
        self.form = form
        self.zariski_dense = zariski_dense
        self.inverse_images = [form.group_inverse(g) for g in self.images]
        self._ad_cache: dict = {}

    @property
    def is_complex(self) -> bool:
        return all(g.is_complex() for g in self.images)

    def non_members(self) -> list:
        """Generator names whose image fails g* J g = J."""
        return [name for name, g in zip(self.generators, self.images)
                if not self.form.preserves(g)]

    def check_membership(self):
        bad = self.non_members()
        if bad:
            raise NotInGroupError(
                f"image of {', '.join(bad)} does not preserve the form (g* J g != J)"
            )

    def letter(self, g: int, e: int) -> QuatMatrix:
        return self.images[g] if e > 0 else self.inverse_images[g]

    def with_form(self, form: HermitianForm) -> Representation:
        return Representation(
            self.generators, dict(zip(self.generators, self.images)), form, self.zariski_dense
        )

    def word_adjoint(self, w: FreeWord, B: LieBasis) -> FMatrix:
        """Ad(rho(w)) as the left-to-right product of generator adjoints."""
        cache = self._ad_cache.setdefault(B, {})
        hit = cache.get(w)
        if hit is not None:
            return hit
        if w.is_identity():
            result = FMatrix.identity(B.dim)
        else:
            g, e = w.letters[-1]
            result = self.word_adjoint(FreeWord(w.letters[:-1]), B) @ B.adjoint(self.letter(g, e))
        cache[w] = result
        return result


def evaluate_word_matrix(w: FreeWord, rho: Representation) -> QuatMatrix:
    result = QuatMatrix.identity()
    for g, e in w.letters:
        result = result @ rho.letter(g, e)
    return result


def evaluate_ad(u: GroupRingElement, rho: Representation, B: LieBasis) -> FMatrix:
    """Image of u under the ring map ZF_n -> End(g) extending Ad o rho."""
    if isinstance(u, FreeWord):
        u = GroupRingElement.of(u)
    acc = FMatrix.zeros(B.dim, B.dim)
    for w, c in u.items():
        term = rho.word_adjoint(w, B)
        acc = acc + (term if c == 1 else term.scale(c))
    return acc


def centralizer_dimension(g: QuatMatrix, B: LieBasis) -> int:
    """Dimension of the fixed space of Ad(g), the centralizer's Lie algebra."""
    A = B.adjoint(g)
    return B.dim - rank(A - FMatrix.identity(B.dim))


def omega() -> Quaternion:
    """Primitive cube root of unity (-1 + i sqrt3) / 2."""
    return Quaternion(FieldElement(-1) / 2, FieldElement(0, 1) / 2)
