"""Graded structure theory: decomposition of semisimple algebras into graded-
simple ideals, graded semisimple complements to the Jacobson radical, and
graded Levi decompositions.

No polynomial factorization anywhere. The semisimple decomposition descends on
graded ideals generated by single homogeneous elements and splits with
two-sided annihilator complements; the complement/Levi constructions lift a
homogeneous linear section and repair multiplicativity with exact linear
solves, scheduled along J, J^2, J^4, ... (respectively the derived series of
the solvable radical).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (ASSOCIATIVE, LIE, GradedAlgebra, algebra_on_subspace,
                      quotient_algebra)
from .errors import InternalCheckError, NotSemisimpleError, ValidationError
from .exactlin import (Mat, Reducer, Subspace, ZERO, is_zero_vector, kernel,
                       solve, unit_vector)
from .radical import jacobson_radical, solvable_radical, bracket_span


@dataclass
class GradedDecomposition:
    kind: str                     # "wedderburn_artin" | "malcev" | "levi"
    components: list

    def dims(self) -> list:
        return [c.dim for c in self.components]


def _homogeneous_candidates(A: GradedAlgebra, piece: Subspace, rng, extra: int = 4):
    """Nonzero homogeneous elements of the piece: projections of its canonical
    basis plus a few seeded random homogeneous combinations per degree."""
    seen = set()
    out = []
    for v in piece.basis_vectors():
        for _, p in A.homogeneous_components(v):
            if p not in seen:
                seen.add(p)
                out.append(p)
    by_degree: dict = {}
    for p in out:
        g = A.degree_of(p)
        by_degree.setdefault(g, []).append(p)
    for g, vecs in list(by_degree.items()):
        if len(vecs) < 2:
            continue
        for _ in range(extra):
            coeffs = [Fraction(rng.randint(-3, 3)) for _ in vecs]
            w = tuple(sum(c * v[i] for c, v in zip(coeffs, vecs)) for i in range(A.dim))
            if not is_zero_vector(w) and w not in seen:
                seen.add(w)
                out.append(w)
    return out


def _minimal_graded_ideal(A: GradedAlgebra, piece: Subspace, rng) -> Subspace:
    """Descend from the piece through graded ideals generated by single
    homogeneous elements until no candidate generates anything smaller."""
    current = piece
    while True:
        best = None
        for x in _homogeneous_candidates(A, current, rng):
            ide = A.ideal_generated([x])
            if 0 < ide.dim < current.dim and (best is None or ide.dim < best.dim):
                best = ide
        if best is None:
            return current
        current = best


def annihilator_within(A: GradedAlgebra, piece: Subspace, ideal: Subspace) -> Subspace:
    """{a in piece : a b = b a = 0 for all b in the ideal}."""
    rows = []
    for b in ideal.basis_vectors():
        rows.extend(A.right_mult_matrix(b).data)   # a -> a b
        rows.extend(A.left_mult_matrix(b).data)    # a -> b a
    if not rows:
        return piece
    ann = kernel(Mat(rows, cols=A.dim))
    return ann & piece


def wedderburn_artin_graded(A: GradedAlgebra, seed: int = 20240901) -> GradedDecomposition:
    """Decompose a semisimple unital algebra into graded-simple ideals.

    Splitting is descent + annihilator complement; each returned component is
    re-verified: pairwise products vanish, dims add up, every candidate
    homogeneous element generates its whole component.
    """
    if A.kind != ASSOCIATIVE:
        raise ValidationError("decomposition applies to associative algebras")
    if A.dim == 0:
        return GradedDecomposition("wedderburn_artin", [])
    if A.unit is None:
        raise ValidationError("decomposition needs a unital algebra")
    if not jacobson_radical(A, verify=False).is_zero():
        raise NotSemisimpleError("algebra has a nonzero radical")
    rng = random.Random(seed)
    final = []
    stack = [Subspace.full(A.dim)]
    while stack:
        piece = stack.pop()
        minimal = _minimal_graded_ideal(A, piece, rng)
        if minimal.dim == piece.dim:
            final.append(piece)
            continue
        rest = annihilator_within(A, piece, minimal)
        if minimal.dim + rest.dim != piece.dim or not (minimal & rest).is_zero():
            raise InternalCheckError("annihilator complement does not split the piece")
        stack.append(minimal)
        stack.append(rest)
    final.sort(key=lambda s: (s.dim, s.mat.data))
    total = sum(c.dim for c in final)
    if total != A.dim:
        raise InternalCheckError("component dimensions do not add up")
    for i, ci in enumerate(final):
        for j, cj in enumerate(final):
            if i == j:
                continue
            for u in ci.basis_vectors():
                for w in cj.basis_vectors():
                    if not is_zero_vector(A.multiply(u, w)):
                        raise InternalCheckError("cross products between components do not vanish")
    for c in final:
        for x in _homogeneous_candidates(A, c, rng):
            if A.ideal_generated([x]) != c:
                raise InternalCheckError(
                    "component is not graded-simple: a homogeneous element generates a proper ideal")
    return GradedDecomposition("wedderburn_artin", final)


def malcev_decomposition(A: GradedAlgebra) -> GradedDecomposition:
    """Complement and radical packaged as one decomposition record."""
    B = malcev_complement_graded(A)
    J = jacobson_radical(A, verify=False)
    parts = [p for p in (B, J) if not p.is_zero()]
    return GradedDecomposition("malcev", parts)


def levi_decomposition(L: GradedAlgebra) -> GradedDecomposition:
    B = levi_graded(L)
    R = solvable_radical(L, verify=False)
    parts = [p for p in (B, R) if not p.is_zero()]
    return GradedDecomposition("levi", parts)


def _reduce_mod(sub: Subspace, v):
    return sub.residual(v)


def malcev_complement_graded(A: GradedAlgebra) -> Subspace:
    """A graded semisimple complement B with A = B (+) J(A).

    Start from the homogeneous standard-vector section of A -> A/J and repair
    multiplicativity modulo J, J^2, J^4, ...; every correction is homogeneous
    because J is graded, so B stays graded. Corrections are the echelon
    particular solution (free variables zero), hence deterministic.
    """
    if A.kind != ASSOCIATIVE:
        raise ValidationError("complement construction applies to associative algebras")
    if A.unit is None:
        raise ValidationError("complement construction needs a unital algebra")
    J = jacobson_radical(A, verify=False)
    if J.is_zero():
        return Subspace.full(A.dim)
    q = quotient_algebra(A, J)
    Q = q.algebra
    r = Q.dim
    section = [list(v) for v in q.section]
    jpow = J
    while not jpow.is_zero():
        jnext = A.product_span(jpow, jpow)
        # unknowns: corrections t_a in (current power) ^ (degree of section a)
        blocks = []
        offsets = []
        off = 0
        for a in range(r):
            comp = Subspace.from_vectors(
                A.dim, [A.homogeneous_projection(v, Q.degrees[a]) for v in jpow.basis_vectors()])
            blocks.append(comp.basis_vectors())
            offsets.append(off)
            off += comp.dim
        nunk = off
        rows = []
        rhs = []
        for a in range(r):
            sa = section[a]
            for b in range(r):
                sb = section[b]
                prod = A.multiply(sa, sb)
                target = [ZERO] * A.dim
                for k in range(r):
                    mu = Q.structure[a][b][k]
                    if mu != 0:
                        for i, x in enumerate(section[k]):
                            target[i] += mu * x
                defect = [p - t for p, t in zip(prod, target)]
                # equation: s_a t_b + t_a s_b - sum_k mu t_k = -defect  (mod jnext)
                cols = [[ZERO] * A.dim for _ in range(nunk)]
                for u, basis_vec in enumerate(blocks[b]):
                    w = A.multiply(sa, basis_vec)
                    col = cols[offsets[b] + u]
                    for i, x in enumerate(w):
                        col[i] += x
                for u, basis_vec in enumerate(blocks[a]):
                    w = A.multiply(basis_vec, sb)
                    col = cols[offsets[a] + u]
                    for i, x in enumerate(w):
                        col[i] += x
                for k in range(r):
                    mu = Q.structure[a][b][k]
                    if mu != 0:
                        for u, basis_vec in enumerate(blocks[k]):
                            col = cols[offsets[k] + u]
                            for i, x in enumerate(basis_vec):
                                col[i] -= mu * x
                red_cols = [_reduce_mod(jnext, col) for col in cols]
                red_rhs = _reduce_mod(jnext, [-d for d in defect])
                for i in range(A.dim):
                    row = [rc[i] for rc in red_cols]
                    if any(x != 0 for x in row) or red_rhs[i] != 0:
                        rows.append(row)
                        rhs.append(red_rhs[i])
        if rows:
            sol = solve(Mat(rows, cols=nunk), rhs)
            if sol is None:
                raise InternalCheckError("complement lifting system is infeasible")
            for a in range(r):
                for u, basis_vec in enumerate(blocks[a]):
                    c = sol[offsets[a] + u]
                    if c != 0:
                        for i, x in enumerate(basis_vec):
                            section[a][i] += c * x
        jpow = jnext
    B = Subspace.from_vectors(A.dim, section)
    _verify_complement(A, B, J, Q, section)
    return B


def _verify_complement(A, B, J, Q, section):
    if B.dim != Q.dim or not (B & J).is_zero() or (B + J).dim != A.dim:
        raise InternalCheckError("complement does not split the algebra")
    for a in range(Q.dim):
        for b in range(Q.dim):
            prod = A.multiply(section[a], section[b])
            expect = [ZERO] * A.dim
            for k in range(Q.dim):
                mu = Q.structure[a][b][k]
                if mu != 0:
                    for i, x in enumerate(section[k]):
                        expect[i] += mu * x
            if tuple(prod) != tuple(expect):
                raise InternalCheckError("complement section is not multiplicative")
    for v in B.basis_vectors():
        if A.degree_of(v) is None:
            raise InternalCheckError("complement is not graded")


def _homogeneous_complement_rows(A: GradedAlgebra, inner: Subspace):
    """Greedy standard-vector extension of `inner` per homogeneous component."""
    red = Reducer(A.dim, inner.basis_vectors())
    rows = []
    for i in range(A.dim):
        if red.insert(unit_vector(A.dim, i)):
            rows.append(list(unit_vector(A.dim, i)))
    return rows


def levi_graded(L: GradedAlgebra) -> Subspace:
    """A graded semisimple subalgebra B with L = B (+) R (solvable radical).

    Recurses along the derived series of R: quotient by [R, R] until the
    radical is abelian, then one exact homogeneous correction solve.
    """
    if L.kind != LIE:
        raise ValidationError("Levi decomposition applies to Lie algebras")
    R = solvable_radical(L, verify=False)
    B = _levi_rows(L, R)
    Bs = Subspace.from_vectors(L.dim, B)
    if Bs.dim != L.dim - R.dim or not (Bs & R).is_zero() or (Bs + R).dim != L.dim:
        raise InternalCheckError("Levi subalgebra does not complement the radical")
    if not L.is_subalgebra(Bs):
        raise InternalCheckError("Levi candidate is not closed under the bracket")
    ok = all(L.degree_of(v) is not None for v in Bs.basis_vectors())
    if not ok:
        raise InternalCheckError("Levi subalgebra is not graded")
    return Bs


def _levi_rows(L: GradedAlgebra, R: Subspace) -> list:
    if R.is_zero():
        return [list(unit_vector(L.dim, i)) for i in range(L.dim)]
    if R.dim == L.dim:
        return []
    DR = bracket_span(L, R, R)
    if not DR.is_zero():
        q = quotient_algebra(L, DR)
        M = q.algebra
        RM = solvable_radical(M, verify=False)
        rows_M = _levi_rows(M, RM)
        # preimage of the Levi part of M: a graded subalgebra with radical [R, R]
        pre = Subspace.from_vectors(
            L.dim, [q.lift(v) for v in rows_M] + list(DR.basis_vectors()))
        emb = algebra_on_subspace(L, pre, name="levi-preimage")
        inner_rows = _levi_rows(emb.algebra, solvable_radical(emb.algebra, verify=False))
        return [list(emb.include(v)) for v in inner_rows]
    # R abelian: correct a homogeneous complement by elements of R
    comp = _homogeneous_complement_rows(L, R)
    m = len(comp)
    rbasis = R.basis_vectors()
    # decompose [c_a, c_b] = sum_k lam^k c_k + d_ab with d_ab in R
    full = Mat(comp + [list(v) for v in rbasis], cols=L.dim).transpose()
    lam = {}
    dpart = {}
    for a in range(m):
        for b in range(m):
            w = L.multiply(comp[a], comp[b])
            coords = solve(full, w)
            if coords is None:
                raise InternalCheckError("complement + radical fail to span")
            lam[(a, b)] = coords[:m]
            dvec = [ZERO] * L.dim
            for u, c in enumerate(coords[m:]):
                if c != 0:
                    for i, x in enumerate(rbasis[u]):
                        dvec[i] += c * x
            dpart[(a, b)] = dvec
    # unknowns: t_a in R ^ (degree of c_a)
    blocks = []
    offsets = []
    off = 0
    degrees = [L.degree_of(c) for c in comp]
    for a in range(m):
        sub = Subspace.from_vectors(
            L.dim, [L.homogeneous_projection(v, degrees[a]) for v in rbasis])
        blocks.append(sub.basis_vectors())
        offsets.append(off)
        off += sub.dim
    nunk = off
    rows = []
    rhs = []
    for a in range(m):
        for b in range(m):
            # [c_a, t_b] + [t_a, c_b] - sum_k lam^k t_k = -d_ab
            cols = [[ZERO] * L.dim for _ in range(nunk)]
            for u, bv in enumerate(blocks[b]):
                w = L.multiply(comp[a], bv)
                col = cols[offsets[b] + u]
                for i, x in enumerate(w):
                    col[i] += x
            for u, bv in enumerate(blocks[a]):
                w = L.multiply(bv, comp[b])
                col = cols[offsets[a] + u]
                for i, x in enumerate(w):
                    col[i] += x
            for k in range(m):
                c = lam[(a, b)][k]
                if c != 0:
                    for u, bv in enumerate(blocks[k]):
                        col = cols[offsets[k] + u]
                        for i, x in enumerate(bv):
                            col[i] -= c * x
            dv = dpart[(a, b)]
            for i in range(L.dim):
                row = [col[i] for col in cols]
                if any(x != 0 for x in row) or dv[i] != 0:
                    rows.append(row)
                    rhs.append(-dv[i])
    if rows:
        sol = solve(Mat(rows, cols=nunk), rhs)
        if sol is None:
            raise InternalCheckError("Levi correction system is infeasible")
        for a in range(m):
            for u, bv in enumerate(blocks[a]):
                c = sol[offsets[a] + u]
                if c != 0:
                    for i, x in enumerate(bv):
                        comp[a][i] += c * x
    return comp
