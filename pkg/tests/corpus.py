"""Seeded corpus of graded associative and Lie algebras for the stability
sweeps: builtins, randomized graded quotients of truncated free-group
algebras, random graded subalgebras of matrix algebras, and direct sums.

Grading groups covered: trivial, Z2, Z3, Z2 x Z2, free(2). All dims <= 8.
"""

from __future__ import annotations

import random
from fractions import Fraction

from gradedalg.algebra import GradedAlgebra, algebra_on_subspace, quotient_algebra
from gradedalg.builders import (direct_sum, free_group_truncation, fz2,
                                group_algebra, gl2_z2, heisenberg3,
                                matrix_algebra, matrix_algebra_z2, sl2,
                                two_dim_nonabelian_lie, upper_triangular, ut2)
from gradedalg.groups import CyclicGroup, ProductGroup

MAX_DIM = 8


def _random_homogeneous(rng, A, g, lo=-2, hi=2):
    v = [Fraction(0)] * A.dim
    for i in A.component_indices(g):
        v[i] = Fraction(rng.randint(lo, hi))
    return tuple(v)


def random_graded_quotient(rng: random.Random) -> GradedAlgebra:
    rank = rng.choice([1, 1, 2])
    cutoff = rng.choice([3, 4]) if rank == 1 else rng.choice([2, 3])
    A = free_group_truncation(rank, cutoff)
    for _ in range(30):
        gens = []
        for _ in range(rng.randint(1, 3)):
            g = rng.choice(A.support[1:])    # skip the unit's component
            gens.append(_random_homogeneous(rng, A, g))
        ideal = A.ideal_generated(gens)
        if 0 < ideal.dim < A.dim and A.dim - ideal.dim <= MAX_DIM:
            return quotient_algebra(A, ideal).algebra
    return A


_MATRIX_BASES = [
    lambda: matrix_algebra_z2(),
    lambda: matrix_algebra(2, CyclicGroup(3), (0, 1), name="m2_z3"),
    lambda: matrix_algebra(2, name="m2"),
    lambda: upper_triangular(3, CyclicGroup(2), (0, 1, 0), name="ut3_z2"),
    lambda: upper_triangular(3, name="ut3"),
]


def random_matrix_subalgebra(rng: random.Random) -> GradedAlgebra:
    base = rng.choice(_MATRIX_BASES)()
    for _ in range(30):
        gens = []
        if rng.random() < 0.5 and base.unit is not None:
            gens.append(base.unit)
        for _ in range(rng.randint(1, 3)):
            g = rng.choice(base.support)
            gens.append(_random_homogeneous(rng, base, g, -1, 1))
        sub = base.subalgebra_generated(gens)
        if 0 < sub.dim <= MAX_DIM:
            return algebra_on_subspace(base, sub, name="sub").algebra
    return base


def _associative_atoms():
    return [
        matrix_algebra_z2(),
        ut2(),
        fz2(),
        free_group_truncation(2, 2),
        free_group_truncation(1, 3),
        matrix_algebra(2, name="m2"),
        upper_triangular(2, name="ut2_triv"),
        group_algebra(CyclicGroup(3), name="fz3"),
        group_algebra(ProductGroup((CyclicGroup(2), CyclicGroup(2))), name="fk4"),
        matrix_algebra(1, CyclicGroup(2), name="f_z2graded"),
    ]


def random_direct_sum(rng: random.Random) -> GradedAlgebra:
    atoms = _associative_atoms()
    for _ in range(30):
        a = rng.choice(atoms)
        b = rng.choice(atoms)
        if a.group != b.group or a.dim + b.dim > MAX_DIM:
            continue
        return direct_sum(a, b)
    a = fz2()
    return direct_sum(a, fz2())


def associative_corpus(seed: int = 20240817, quotients: int = 70,
                       subalgebras: int = 65, sums: int = 60) -> list:
    """At least 200 graded associative algebras, dims <= 8, varied groups."""
    rng = random.Random(seed)
    corpus = list(_associative_atoms())
    corpus += [
        free_group_truncation(2, 3),
        free_group_truncation(1, 4),
        upper_triangular(3, name="ut3"),
        group_algebra(CyclicGroup(2), name="fz2b"),
    ]
    for _ in range(quotients):
        corpus.append(random_graded_quotient(rng))
    for _ in range(subalgebras):
        corpus.append(random_matrix_subalgebra(rng))
    for _ in range(sums):
        corpus.append(random_direct_sum(rng))
    assert all(a.dim <= MAX_DIM for a in corpus)
    return corpus


def lie_corpus() -> list:
    """Lie builtins plus graded direct sums over matching groups."""
    out = [sl2(), gl2_z2(), heisenberg3(), two_dim_nonabelian_lie()]
    out.append(direct_sum(sl2(), sl2(), name="sl2+sl2"))
    out.append(direct_sum(gl2_z2(), two_dim_nonabelian_lie(), name="gl2+aff1"))
    out.append(direct_sum(heisenberg3(), heisenberg3(), name="heis3+heis3"))
    out.append(direct_sum(two_dim_nonabelian_lie(), two_dim_nonabelian_lie(), name="aff1+aff1"))
    return out
