"""Finite-dimensional group-graded algebras over Q via structure constants.

A `GradedAlgebra` stores a dense tensor c[i][j][k] (the product of basis
vectors i and j has coefficient c[i][j][k] on basis vector k) plus one group
element per basis vector. Constructors validate everything: grading
compatibility, associativity or antisymmetry + Jacobi, and the unit law.
Instances are immutable in use; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (DimensionMismatchError, NotAnIdealError, NotGradedError,
                     ValidationError)
from .exactlin import (Mat, Reducer, Subspace, ZERO, as_vector, invert,
                       is_zero_vector, solve, unit_vector)
from .groups import Group, GroupElem

ASSOCIATIVE = "associative"
LIE = "lie"


def _sparse_add(acc: dict, other, factor):
    for k, c in other:
        v = acc.get(k, ZERO) + factor * c
        if v == 0:
            acc.pop(k, None)
        else:
            acc[k] = v


class GradedAlgebra:
    def __init__(self, group: Group, degrees: Sequence[GroupElem], structure,
                 kind: str = ASSOCIATIVE, unit=None, name: str = ""):
        if kind not in (ASSOCIATIVE, LIE):
            raise ValidationError(f"unknown algebra kind {kind!r}")
        self.group = group
        self.degrees = tuple(degrees)
        self.dim = len(self.degrees)
        self.kind = kind
        self.name = name
        for i, g in enumerate(self.degrees):
            if not isinstance(g, GroupElem) or g.group != group:
                raise ValidationError(f"degree of basis vector {i} is not an element of the grading group")
        self.structure = tuple(
            tuple(as_vector(structure[i][j]) for j in range(self.dim))
            for i in range(self.dim))
        for i in range(self.dim):
            if len(structure[i]) != self.dim:
                raise ValidationError(f"structure tensor row {i} has wrong length")
            for j in range(self.dim):
                if len(self.structure[i][j]) != self.dim:
                    raise ValidationError(f"structure entry ({i},{j}) has wrong length")
        # sparse view: sc[i][j] = ((k, c), ...) over nonzero c
        self._sc = tuple(
            tuple(tuple((k, c) for k, c in enumerate(row) if c != 0)
                  for row in plane)
            for plane in self.structure)
        if unit is not None:
            if kind == LIE:
                raise ValidationError("Lie algebras carry no unit")
            unit = as_vector(unit)
            if len(unit) != self.dim:
                raise DimensionMismatchError("unit vector has wrong length")
        self.unit = unit
        # support: distinct degrees in order of first occurrence
        seen = []
        comp: dict[GroupElem, list[int]] = {}
        for i, g in enumerate(self.degrees):
            if g not in comp:
                comp[g] = []
                seen.append(g)
            comp[g].append(i)
        self.support = tuple(seen)
        self._components = {g: tuple(ix) for g, ix in comp.items()}
        self._validate()

    # -- validation ---------------------------------------------------------

    def _validate(self):
        for i in range(self.dim):
            gi = self.degrees[i]
            for j in range(self.dim):
                gij = gi * self.degrees[j]
                for k, c in self._sc[i][j]:
                    if self.degrees[k] != gij:
                        raise ValidationError(
                            f"grading violated: c[{i}][{j}][{k}] != 0 but "
                            f"deg[{k}] differs from deg[{i}]*deg[{j}]")
        if self.kind == ASSOCIATIVE:
            self._check_associativity()
        else:
            self._check_lie()
        if self.unit is not None:
            for b in range(self.dim):
                eb = unit_vector(self.dim, b)
                if self.multiply(self.unit, eb) != eb or self.multiply(eb, self.unit) != eb:
                    raise ValidationError(f"unit law fails on basis vector {b}")

    def _check_associativity(self):
        sc = self._sc
        for i in range(self.dim):
            for j in range(self.dim):
                pij = sc[i][j]
                for k in range(self.dim):
                    left: dict = {}
                    for l, c in pij:
                        _sparse_add(left, sc[l][k], c)
                    right: dict = {}
                    for m, c in sc[j][k]:
                        _sparse_add(right, sc[i][m], c)
                    if left != right:
                        raise ValidationError(f"associativity fails on basis triple ({i},{j},{k})")

    def _check_lie(self):
        for i in range(self.dim):
            if self._sc[i][i]:
                raise ValidationError(f"[x,x] != 0 on basis vector {i}")
            for j in range(self.dim):
                for k in range(self.dim):
                    if self.structure[i][j][k] != -self.structure[j][i][k]:
                        raise ValidationError(f"antisymmetry fails at ({i},{j},{k})")
        sc = self._sc
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    acc: dict = {}
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for l, f in sc[a][b]:
                            _sparse_add(acc, sc[l][c], f)
                    if acc:
                        raise ValidationError(f"Jacobi identity fails on ({i},{j},{k})")

    # -- basic operations ---------------------------------------------------

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def multiply(self, a, b) -> tuple:
        if len(a) != self.dim or len(b) != self.dim:
            raise DimensionMismatchError("vectors have wrong ambient dimension")
        acc = [ZERO] * self.dim
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            sci = self._sc[i]
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                f = ai * bj
                for k, c in sci[j]:
                    acc[k] += f * c
        return tuple(acc)

    def mul_sparse(self, sa: dict, sb: dict) -> dict:
        acc: dict = {}
        for i, ai in sa.items():
            sci = self._sc[i]
            for j, bj in sb.items():
                _sparse_add(acc, sci[j], ai * bj)
        return acc

    def left_mult_matrix(self, a) -> Mat:
        """Matrix of b -> a b in the algebra basis."""
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(self.dim):
                for k, c in self._sc[i][j]:
                    rows[k][j] += ai * c
        return Mat(rows, cols=self.dim)

    def right_mult_matrix(self, a) -> Mat:
        """Matrix of b -> b a in the algebra basis."""
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for j, aj in enumerate(a):
            if aj == 0:
                continue
            for i in range(self.dim):
                for k, c in self._sc[i][j]:
                    rows[k][i] += aj * c
        return Mat(rows, cols=self.dim)

    def trace_of_left_mult(self, a) -> Fraction:
        t = ZERO
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(self.dim):
                t += ai * self.structure[i][j][j]
        return t

    # -- grading ------------------------------------------------------------

    def component_indices(self, g: GroupElem) -> tuple:
        return self._components.get(g, ())

    def homogeneous_projection(self, v, g: GroupElem) -> tuple:
        if len(v) != self.dim:
            raise DimensionMismatchError("vector has wrong ambient dimension")
        return tuple(x if self.degrees[i] == g else ZERO for i, x in enumerate(v))

    def homogeneous_components(self, v) -> list:
        """Nonzero pieces [(g, pi_g(v)), ...] in support order."""
        out = []
        for g in self.support:
            p = self.homogeneous_projection(v, g)
            if not is_zero_vector(p):
                out.append((g, p))
        return out

    def degree_of(self, v):
        """The degree of a homogeneous vector, None for 0 or mixed vectors."""
        comps = self.homogeneous_components(v)
        if len(comps) == 1:
            return comps[0][0]
        return None

    # -- ideals and subalgebras ---------------------------------------------

    def ideal_generated(self, gens: Iterable) -> Subspace:
        """Smallest two-sided ideal containing the generators: closure of their
        span under left/right multiplication by basis vectors."""
        red = Reducer(self.dim)
        for v in gens:
            red.insert(v)
        work = [list(r) for r in red.rows]
        while work:
            v = work.pop()
            sv = {i: c for i, c in enumerate(v) if c != 0}
            for b in range(self.dim):
                sb = {b: Fraction(1)}
                for prod in (self.mul_sparse(sb, sv), self.mul_sparse(sv, sb)):
                    if not prod:
                        continue
                    w = [ZERO] * self.dim
                    for k, c in prod.items():
                        w[k] = c
                    if red.insert(w):
                        work.append(w)
        return red.subspace()

    def subalgebra_generated(self, gens: Iterable) -> Subspace:
        """Smallest multiplicatively closed subspace containing the generators."""
        red = Reducer(self.dim)
        for v in gens:
            red.insert(v)
        changed = True
        while changed:
            changed = False
            basis = [list(r) for r in red.rows]
            for u in basis:
                su = {i: c for i, c in enumerate(u) if c != 0}
                for w in basis:
                    sw = {i: c for i, c in enumerate(w) if c != 0}
                    prod = self.mul_sparse(su, sw)
                    v = [ZERO] * self.dim
                    for k, c in prod.items():
                        v[k] = c
                    if red.insert(v):
                        changed = True
        return red.subspace()

    def product_span(self, s1: Subspace, s2: Subspace) -> Subspace:
        """Span of pairwise products of the two bases."""
        red = Reducer(self.dim)
        for u in s1.basis_vectors():
            for w in s2.basis_vectors():
                red.insert(self.multiply(u, w))
        return red.subspace()

    def is_ideal(self, s: Subspace) -> bool:
        if s.ambient != self.dim:
            raise DimensionMismatchError("subspace lives in a different ambient space")
        for v in s.basis_vectors():
            for b in range(self.dim):
                eb = self.basis_vector(b)
                if not s.contains(self.multiply(eb, v)):
                    return False
                if not s.contains(self.multiply(v, eb)):
                    return False
        return True

    def is_subalgebra(self, s: Subspace) -> bool:
        basis = s.basis_vectors()
        for u in basis:
            for w in basis:
                if not s.contains(self.multiply(u, w)):
                    return False
        return True

    def __repr__(self):
        label = self.name or f"{self.kind} algebra"
        return f"GradedAlgebra({label}, dim={self.dim}, group={self.group!r})"


def nilpotency_index(A: GradedAlgebra, s: Subspace | None = None):
    """Smallest p with S^p = 0 for the subspace S (default: the whole algebra),
    powers taken as iterated product spans; None if S is not nilpotent."""
    if s is None:
        s = Subspace.full(A.dim)
    if s.is_zero():
        return 1
    power = s
    p = 1
    while p <= A.dim + 1:
        power = A.product_span(power, s)
        p += 1
        if power.is_zero():
            return p
    return None


@dataclass
class QuotientResult:
    algebra: GradedAlgebra
    section: tuple          # quotient basis lifted to ambient vectors (standard basis vectors)
    projection: Mat         # dim(quotient) x dim(A), v -> coordinates of v + I
    indices: tuple          # ambient indices of the chosen complement vectors

    def project(self, v) -> tuple:
        return self.projection.mul_vec(v)

    def lift(self, vq) -> tuple:
        out = [ZERO] * self.projection.cols
        for coeff, vec in zip(vq, self.section):
            if coeff != 0:
                for i, x in enumerate(vec):
                    out[i] += coeff * x
        return tuple(out)


def quotient_algebra(A: GradedAlgebra, ideal: Subspace, name: str = "") -> QuotientResult:
    """Quotient by a graded two-sided ideal, on a homogeneous complement basis.

    The complement is picked by greedy pivot extension in basis order (which
    works per homogeneous component), so quotient bases are reproducible and
    every quotient basis vector is the class of a standard basis vector of A.
    """
    if ideal.ambient != A.dim:
        raise DimensionMismatchError("ideal lives in a different ambient space")
    if not A.is_ideal(ideal):
        raise NotAnIdealError("subspace is not a two-sided ideal")
    closure = Subspace.from_vectors(
        A.dim, [p for v in ideal.basis_vectors() for _, p in A.homogeneous_components(v)])
    if closure != ideal:
        raise NotGradedError("ideal is not graded: it differs from its graded closure")
    red = Reducer(A.dim, ideal.basis_vectors())
    chosen = []
    # basis order; each homogeneous standard vector only reduces against rows
    # of its own component, so this is greedy extension per component
    for i in range(A.dim):
        if red.insert(unit_vector(A.dim, i)):
            chosen.append(i)
    qdim = len(chosen)
    assert qdim == A.dim - ideal.dim
    # full coordinates w.r.t. rows(ideal basis) + chosen standard vectors
    rows = [list(r) for r in ideal.basis_vectors()] + [list(unit_vector(A.dim, i)) for i in chosen]
    binv = invert(Mat(rows, cols=A.dim).transpose())
    proj = Mat(binv.data[ideal.dim:], cols=A.dim)
    section = tuple(unit_vector(A.dim, i) for i in chosen)
    structure = [[proj.mul_vec(A.multiply(section[a], section[b])) for b in range(qdim)]
                 for a in range(qdim)]
    degrees = [A.degrees[i] for i in chosen]
    unit = proj.mul_vec(A.unit) if A.unit is not None else None
    Q = GradedAlgebra(A.group, degrees, structure, kind=A.kind, unit=unit,
                      name=name or (A.name + "/I" if A.name else ""))
    return QuotientResult(Q, section, proj, tuple(chosen))


def unitalize(A: GradedAlgebra) -> GradedAlgebra:
    """Adjoin a formal unit of identity degree as the last basis vector."""
    if A.kind != ASSOCIATIVE:
        raise ValidationError("only associative algebras are unitalized")
    n = A.dim
    structure = [[list(A.structure[i][j]) + [ZERO] for j in range(n)] + [None]
                 for i in range(n)] + [None]
    for i in range(n):
        structure[i][n] = list(unit_vector(n + 1, i))
    structure[n] = [list(unit_vector(n + 1, j)) for j in range(n)] + [list(unit_vector(n + 1, n))]
    degrees = list(A.degrees) + [A.group.identity()]
    return GradedAlgebra(A.group, degrees, structure, kind=ASSOCIATIVE,
                         unit=unit_vector(n + 1, n),
                         name=(A.name + "+1") if A.name else "unitalized")


@dataclass
class SubalgebraEmbedding:
    algebra: GradedAlgebra
    rows: tuple             # basis of the subalgebra as ambient vectors

    def include(self, v_sub) -> tuple:
        n = len(self.rows[0]) if self.rows else 0
        out = [ZERO] * n
        for c, r in zip(v_sub, self.rows):
            if c != 0:
                for i, x in enumerate(r):
                    out[i] += c * x
        return tuple(out)


def algebra_on_subspace(A: GradedAlgebra, s: Subspace, name: str = "") -> SubalgebraEmbedding:
    """Make a multiplicatively closed graded subspace into an algebra of its own.

    The canonical RREF basis of a graded subspace is automatically homogeneous
    (each row equals one of its own projections), which is verified here.
    """
    rows = s.basis_vectors()
    degrees = []
    for r in rows:
        g = A.degree_of(r)
        if g is None:
            raise NotGradedError("subspace is not graded: basis vector mixes degrees")
        degrees.append(g)
    dim = len(rows)
    structure = []
    for a in range(dim):
        line = []
        for b in range(dim):
            prod = A.multiply(rows[a], rows[b])
            coords = s.coords(prod)
            if coords is None:
                raise ValidationError("subspace is not multiplicatively closed")
            line.append(coords)
        structure.append(line)
    unit = None
    if A.kind == ASSOCIATIVE and dim > 0:
        # a unit of the subalgebra, if one exists: u * r_b = r_b * u = r_b
        eqs = []
        rhs = []
        for b in range(dim):
            for k in range(dim):
                eqs.append([structure[a][b][k] for a in range(dim)])
                rhs.append(Fraction(1) if b == k else ZERO)
                eqs.append([structure[b][a][k] for a in range(dim)])
                rhs.append(Fraction(1) if b == k else ZERO)
        sol = solve(Mat(eqs, cols=dim), rhs)
        if sol is not None:
            unit = sol
    alg = GradedAlgebra(A.group, degrees, structure, kind=A.kind, unit=unit, name=name)
    return SubalgebraEmbedding(alg, tuple(rows))
