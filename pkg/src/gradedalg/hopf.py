"""Dual-action layer for group gradings.

A grading by G makes the algebra a comodule over the group algebra QG, and the
dual algebra (QG)* acts by weighted sums of homogeneous projections. Elements
of (QG)* are kept as finitely supported functionals; the window type carries
the finite chunk of QG (support, its pairwise products, inverses) on which the
product-splitting certificate is checked. The group-algebra case is the only
instantiation here; the window type is the seam where other finite coalgebra
fragments would plug in.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import ASSOCIATIVE, GradedAlgebra, unitalize
from .errors import GroupMismatchError, NotAnIdealError
from .exactlin import Reducer, Subspace, ZERO, as_rat
from .groups import Group, GroupElem


class DualFunctional:
    """A finitely supported function G -> Q, i.e. an element of (QG)* seen
    through its nonzero values."""

    __slots__ = ("group", "values")

    def __init__(self, group: Group, values=None):
        self.group = group
        vals = {}
        for g, c in (values or {}).items():
            if not isinstance(g, GroupElem) or g.group != group:
                raise GroupMismatchError("functional support must lie in the stated group")
            c = as_rat(c)
            if c != 0:
                vals[g] = c
        self.values = vals

    @classmethod
    def delta(cls, g: GroupElem) -> "DualFunctional":
        return cls(g.group, {g: Fraction(1)})

    @classmethod
    def all_ones(cls, group: Group, elems) -> "DualFunctional":
        """The operational counit: value 1 on each listed element."""
        return cls(group, {g: Fraction(1) for g in elems})

    def __call__(self, g: GroupElem) -> Fraction:
        if g.group != self.group:
            raise GroupMismatchError("evaluating a functional outside its group")
        return self.values.get(g, ZERO)

    def support(self) -> tuple:
        return tuple(sorted(self.values, key=self.group.sort_key))

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "DualFunctional") -> "DualFunctional":
        if other.group != self.group:
            raise GroupMismatchError("adding functionals on different groups")
        vals = dict(self.values)
        for g, c in other.values.items():
            vals[g] = vals.get(g, ZERO) + c
        return DualFunctional(self.group, vals)

    def scale(self, c) -> "DualFunctional":
        c = as_rat(c)
        return DualFunctional(self.group, {g: c * v for g, v in self.values.items()})

    def translate(self, g: GroupElem) -> "DualFunctional":
        """The functional q -> self(g q)."""
        ginv = g.inverse()
        return DualFunctional(self.group, {ginv * s: v for s, v in self.values.items()})

    def __eq__(self, other):
        return (isinstance(other, DualFunctional) and other.group == self.group
                and other.values == self.values)

    def __hash__(self):
        items = tuple(sorted(((g.key, v) for g, v in self.values.items()),
                             key=lambda it: self.group.sort_key(
                                 GroupElem(self.group, it[0]))))
        return hash((self.group, items))

    def __repr__(self):
        parts = [f"{v}*d[{g!r}]" for g, v in sorted(
            self.values.items(), key=lambda it: self.group.sort_key(it[0]))]
        return " + ".join(parts) if parts else "0"


class CoalgebraWindow:
    """Finite window of QG closed enough for the product-splitting certificate:
    the listed elements contain the grading support, all pairwise products of
    support elements, and the inverses of all of those."""

    __slots__ = ("group", "basis", "closed_products")

    def __init__(self, group: Group, basis, closed_products=None):
        self.group = group
        self.basis = tuple(basis)
        if closed_products is None:
            inside = set(g.key for g in self.basis)
            closed_products = {(a, b): (a * b).key in inside
                               for a in self.basis for b in self.basis}
        self.closed_products = closed_products

    @classmethod
    def from_support(cls, group: Group, support) -> "CoalgebraWindow":
        seen = []
        keys = set()

        def push(g):
            if g.key not in keys:
                keys.add(g.key)
                seen.append(g)

        support = list(support)
        for g in support:
            push(g)
        for a in support:
            for b in support:
                push(a * b)
        for g in list(seen):
            push(g.inverse())
        return cls(group, seen)

    @classmethod
    def for_algebra(cls, A: GradedAlgebra) -> "CoalgebraWindow":
        return cls.from_support(A.group, A.support)

    def contains(self, g: GroupElem) -> bool:
        return any(g == b for b in self.basis)

    def __repr__(self):
        return f"CoalgebraWindow(|basis|={len(self.basis)})"


def dual_action(f: DualFunctional, v, A: GradedAlgebra) -> tuple:
    """f . v = sum over the support of f(g) * pi_g(v); linear in both arguments."""
    if f.group != A.group:
        raise GroupMismatchError("functional acts on an algebra graded by another group")
    acc = [ZERO] * A.dim
    for g in A.support:
        c = f(g)
        if c == 0:
            continue
        for i in A.component_indices(g):
            acc[i] += c * v[i]
    return tuple(acc)


def xi_decompose(f: DualFunctional, window: CoalgebraWindow):
    """Split f of a product into a finite sum of pure tensors on the window:
    f(g q) = sum_i f_i'(g) f_i''(q) for all g, q in the window basis.

    For group algebras the pairs are (delta_g, q -> f(g q)); zero second legs
    are dropped, so at most |window| pairs are returned.
    """
    if f.group != window.group:
        raise GroupMismatchError("functional and window live on different groups")
    pairs = []
    for g in window.basis:
        t = f.translate(g)
        if not t.is_zero():
            pairs.append((DualFunctional.delta(g), t))
    return pairs


def hstar_closure(w: Subspace, A: GradedAlgebra) -> Subspace:
    """Smallest subspace containing w and closed under all delta actions;
    equals the graded closure (the sum of homogeneous projections of w)."""
    red = Reducer(A.dim, w.basis_vectors())
    work = [list(r) for r in red.rows]
    deltas = [DualFunctional.delta(g) for g in A.support]
    while work:
        v = work.pop()
        for d in deltas:
            p = dual_action(d, v, A)
            if red.insert(p):
                work.append(list(p))
    return red.subspace()


def verify_ideal_closure(ideal: Subspace, A: GradedAlgebra) -> bool:
    """Check that the delta-closure of a two-sided ideal is again a two-sided
    ideal; raises if the input is not an ideal to begin with."""
    if not A.is_ideal(ideal):
        raise NotAnIdealError("input subspace is not a two-sided ideal")
    closed = hstar_closure(ideal, A)
    if not closed.contains_subspace(ideal):
        return False
    return A.is_ideal(closed)


def trace_identity_check(f: DualFunctional, a, A: GradedAlgebra) -> bool:
    """Exact check of tr(L(f.a)) = f(identity) * tr(L(a)) where L is the left
    regular representation (the adjoint one for Lie algebras).

    Non-unital associative algebras are unitalized first; for Lie algebras the
    identity needs only the grading of the bracket, so it is checked directly.
    """
    if A.kind == ASSOCIATIVE and A.unit is None:
        A = unitalize(A)
        a = tuple(a) + (ZERO,)
    lhs = A.trace_of_left_mult(dual_action(f, a, A))
    rhs = f(A.group.identity()) * A.trace_of_left_mult(a)
    return lhs == rhs
