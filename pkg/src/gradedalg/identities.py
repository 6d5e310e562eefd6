"""Multilinear graded and functional-label polynomial identities and their
codimension sequences.

A degree assignment attaches one support degree to each of the n variables;
the monomials of one assignment use their own private variables, so the
evaluation matrix splits into independent blocks per assignment and the n-th
codimension is the sum of block ranks. The functional-label ("delta") pipeline
computes the same numbers through projections of unrestricted substitutions;
the two routes are compared in the tests and must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product as iproduct

from .algebra import ASSOCIATIVE, GradedAlgebra, nilpotency_index
from .errors import ResourceCapError, ValidationError
from .exactlin import Reducer, ZERO, as_rat, is_zero_vector
from .groups import GroupElem
from .hopf import DualFunctional, dual_action

DEFAULT_MAX_N = 6
DEFAULT_MAX_BLOCKS = 100_000


def _check_perm(perm, n):
    if sorted(perm) != list(range(n)):
        raise ValidationError(f"{perm!r} is not a permutation of 0..{n - 1}")


class MultilinearGradedPoly:
    """Multilinear polynomial in variables x_0..x_{n-1}, each occurrence
    carrying a degree label; terms map (word order, degree-per-variable) to a
    coefficient.

    The pair key means: the monomial is x_{perm[0]} x_{perm[1]} ... with
    variable i labelled by degs[i]. Note x_i with two different labels are two
    different free variables; they may substitute independently.
    """

    def __init__(self, n: int, terms: dict):
        self.n = n
        clean = {}
        for (perm, degs), coeff in terms.items():
            perm = tuple(perm)
            degs = tuple(degs)
            _check_perm(perm, n)
            if len(degs) != n:
                raise ValidationError("need one degree label per variable")
            coeff = as_rat(coeff)
            if coeff != 0:
                clean[(perm, degs)] = clean.get((perm, degs), ZERO) + coeff
        self.terms = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def monomial(cls, perm, degs, coeff=1) -> "MultilinearGradedPoly":
        return cls(len(perm), {(tuple(perm), tuple(degs)): coeff})

    def __add__(self, other):
        if other.n != self.n:
            raise ValidationError("adding polynomials in different variable counts")
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, ZERO) + v
        return MultilinearGradedPoly(self.n, merged)

    def scale(self, c):
        c = as_rat(c)
        return MultilinearGradedPoly(self.n, {k: c * v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return not self.terms


class FunctionalPoly:
    """Multilinear polynomial whose variables carry delta-functional labels
    drawn from the support of a fixed algebra.

    General functional labels are reduced eagerly at construction: a label f
    expands into the delta labels on the support weighted by f's values there
    (values off the support act as zero on the algebra).
    """

    def __init__(self, n: int, terms: dict, support=None):
        self.n = n
        clean: dict = {}
        for (perm, labels), coeff in terms.items():
            perm = tuple(perm)
            _check_perm(perm, n)
            coeff = as_rat(coeff)
            if coeff == 0:
                continue
            if any(isinstance(l, DualFunctional) for l in labels):
                if support is None:
                    raise ValidationError("general functional labels need the support for reduction")
                choices = []
                for l in labels:
                    if isinstance(l, DualFunctional):
                        choices.append([(g, l(g)) for g in support])
                    else:
                        choices.append([(l, Fraction(1))])
                for combo in iproduct(*choices):
                    c = coeff
                    for _, w in combo:
                        c *= w
                    if c == 0:
                        continue
                    key = (perm, tuple(g for g, _ in combo))
                    clean[key] = clean.get(key, ZERO) + c
            else:
                key = (perm, tuple(labels))
                clean[key] = clean.get(key, ZERO) + coeff
        for (_, labels) in clean:
            for l in labels:
                if not isinstance(l, GroupElem):
                    raise ValidationError(f"label {l!r} is neither a functional nor a group element")
        self.terms = {k: v for k, v in clean.items() if v != 0}

    def is_zero(self):
        return not self.terms


def gr_to_h(f: MultilinearGradedPoly, A: GradedAlgebra) -> FunctionalPoly:
    """Relabel degree labels as delta labels; labels outside the support map
    to zero (terms carrying them are dropped)."""
    support = set(A.support)
    terms = {}
    for (perm, degs), coeff in f.terms.items():
        if any(g not in support for g in degs):
            continue
        terms[(perm, degs)] = terms.get((perm, degs), ZERO) + coeff
    return FunctionalPoly(f.n, terms)


def h_to_gr(f: FunctionalPoly, A: GradedAlgebra) -> MultilinearGradedPoly:
    """Relabel delta labels as degree labels."""
    return MultilinearGradedPoly(f.n, dict(f.terms))


def _fold_basis_product(A: GradedAlgebra, seq) -> dict:
    """Sparse product of basis vectors in word order."""
    acc = {seq[0]: Fraction(1)}
    for b in seq[1:]:
        acc = A.mul_sparse(acc, {b: Fraction(1)})
        if not acc:
            break
    return acc


def is_graded_identity(f: MultilinearGradedPoly, A: GradedAlgebra) -> bool:
    """True iff f vanishes under every substitution sending each labelled
    variable into its component; by multilinearity basis tuples suffice.
    Variables labelled outside the support only admit zero, so terms carrying
    them vanish identically."""
    terms = {k: v for k, v in f.terms.items()
             if all(A.component_indices(g) for g in set(k[1]))}
    if not terms:
        return True
    slots = sorted({(i, degs[i]) for (_, degs) in terms for i in range(f.n)},
                   key=lambda s: (s[0], A.group.sort_key(s[1])))
    slot_pos = {s: p for p, s in enumerate(slots)}
    options = [A.component_indices(g) for (_, g) in slots]
    for choice in iproduct(*options):
        acc = [ZERO] * A.dim
        for (perm, degs), coeff in terms.items():
            seq = [choice[slot_pos[(i, degs[i])]] for i in perm]
            prod = _fold_basis_product(A, seq)
            for k, c in prod.items():
                acc[k] += coeff * c
        if not is_zero_vector(acc):
            return False
    return True


def evaluate_functional_poly(f: FunctionalPoly, A: GradedAlgebra, vectors) -> tuple:
    """Evaluate with x_i := vectors[i]; each labelled occurrence projects its
    argument onto the label's component."""
    if len(vectors) != f.n:
        raise ValidationError("need one substitution vector per variable")
    acc = [ZERO] * A.dim
    for (perm, labels), coeff in f.terms.items():
        cur = None
        for p in perm:
            v = dual_action(DualFunctional.delta(labels[p]), vectors[p], A)
            cur = v if cur is None else A.multiply(cur, v)
            if is_zero_vector(cur):
                break
        for k, c in enumerate(cur):
            acc[k] += coeff * c
    return tuple(acc)


def is_functional_identity(f: FunctionalPoly, A: GradedAlgebra) -> bool:
    """True iff f vanishes for all substitutions X -> A (basis tuples suffice)."""
    for choice in iproduct(range(A.dim), repeat=f.n):
        vectors = [A.basis_vector(i) for i in choice]
        if not is_zero_vector(evaluate_functional_poly(f, A, vectors)):
            return False
    return True


def _guard(A: GradedAlgebra, n: int, max_n: int, max_blocks: int):
    if n < 1:
        raise ValidationError("codimensions start at n = 1")
    if n > max_n:
        raise ResourceCapError(f"n = {n} exceeds the cap of {max_n}")
    m = len(A.support)
    if m ** n > max_blocks:
        raise ResourceCapError(
            f"{m}^{n} = {m ** n} degree assignments exceed the cap of {max_blocks}")


def codim_block(A: GradedAlgebra, degs) -> int:
    """Rank of one assignment block: rows are the n! word orders, columns are
    (matching basis tuple) x (output coordinate)."""
    degs = tuple(degs)
    n = len(degs)
    comps = [A.component_indices(g) for g in degs]
    if any(not c for c in comps):
        return 0
    tuples = list(iproduct(*comps))
    width = len(tuples) * A.dim
    red = Reducer(width)
    rank = 0
    for perm in permutations(range(n)):
        row = [ZERO] * width
        nonzero = False
        for t_idx, tup in enumerate(tuples):
            seq = [tup[p] for p in perm]
            prod = _fold_basis_product(A, seq)
            if prod:
                nonzero = True
                base = t_idx * A.dim
                for k, c in prod.items():
                    row[base + k] = c
        if nonzero and red.insert(row):
            rank += 1
    return rank


def graded_codimension(A: GradedAlgebra, n: int, max_n: int = DEFAULT_MAX_N,
                       max_blocks: int = DEFAULT_MAX_BLOCKS) -> int:
    """c_n = sum of block ranks over all assignments in Support^n. The trivial
    group reproduces ordinary codimensions."""
    if A.kind != ASSOCIATIVE:
        raise ValidationError("codimensions are computed for associative algebras")
    _guard(A, n, max_n, max_blocks)
    total = 0
    for degs in iproduct(A.support, repeat=n):
        total += codim_block(A, degs)
    return total


def functional_codimension(A: GradedAlgebra, n: int, max_n: int = DEFAULT_MAX_N,
                           max_blocks: int = DEFAULT_MAX_BLOCKS) -> int:
    """Codimension of delta-labelled multilinear polynomials, evaluated through
    projections of unrestricted basis substitutions.

    Labels range over the support only: a general label reduces to that span,
    which changes no ranks. Must agree with graded_codimension for every n.
    """
    if A.kind != ASSOCIATIVE:
        raise ValidationError("codimensions are computed for associative algebras")
    _guard(A, n, max_n, max_blocks)
    dim = A.dim
    total = 0
    deg_of = A.degrees
    for labels in iproduct(A.support, repeat=n):
        # columns: all basis substitution tuples x coordinates; the projection
        # zeroes any tuple not matching the labels, so prune early
        tuples = [t for t in iproduct(range(dim), repeat=n)
                  if all(deg_of[t[i]] == labels[i] for i in range(n))]
        if not tuples:
            continue
        width = len(tuples) * dim
        red = Reducer(width)
        for perm in permutations(range(n)):
            row = [ZERO] * width
            nonzero = False
            for t_idx, tup in enumerate(tuples):
                cur = None
                for p in perm:
                    v = dual_action(DualFunctional.delta(labels[p]),
                                    A.basis_vector(tup[p]), A)
                    cur = v if cur is None else A.multiply(cur, v)
                    if is_zero_vector(cur):
                        break
                if cur is not None and not is_zero_vector(cur):
                    nonzero = True
                    base = t_idx * dim
                    for k, c in enumerate(cur):
                        if c != 0:
                            row[base + k] = c
            if nonzero:
                red.insert(row)
        total += red.dim
    return total


def nilpotent_shortcut(A: GradedAlgebra, n: int):
    """0 when the algebra is certified nilpotent of index <= n (then every
    product of n factors vanishes); None when the shortcut does not apply."""
    if A.unit is not None:
        return None
    p = nilpotency_index(A)
    if p is not None and n >= p:
        return 0
    return None


def _int_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) by integer Newton iteration."""
    if x < 0:
        raise ValidationError("negative radicand")
    if x == 0:
        return 0
    r = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        nr = ((n - 1) * r + x // r ** (n - 1)) // n
        if nr >= r:
            break
        r = nr
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def decimal_root(c: int, n: int, digits: int = 4) -> str:
    """c ** (1/n) truncated to `digits` decimals, computed in integers."""
    scaled = _int_nth_root(c * 10 ** (digits * n), n)
    s = str(scaled).rjust(digits + 1, "0")
    return s[:-digits] + "." + s[-digits:]


@dataclass
class ExponentVerdict:
    predicted: int | None
    nilpotent: bool
    consistent: bool | None          # None when no prediction was given
    lower_power: int | None = None   # r1 with C1 n^r1 d^n <= c_n on the range
    upper_power: int | None = None   # r2 with c_n <= C2 n^r2 d^n on the range
    lower_const: Fraction | None = None
    upper_const: Fraction | None = None
    message: str = ""


@dataclass
class CodimReport:
    mode: str
    values: list                     # c_1 .. c_N
    per_n: list = field(default_factory=list)
    roots: list = field(default_factory=list)     # decimal strings (exact truncations)
    ratios: list = field(default_factory=list)    # Fractions c_{n+1}/c_n
    verdict: ExponentVerdict | None = None
    shortcuts: list = field(default_factory=list)  # n values settled by nilpotency


_POWER_WINDOW = 64


def exponent_estimate(values, predicted_d: int | None = None) -> ExponentVerdict:
    """Finite-range growth verdict for a codimension sequence.

    With a predicted exponent d, fit the log-log chord through the endpoints of
    u_n = c_n / d^n: the integers r1 = floor, r2 = ceil of the chord slope, and
    constants anchored at the endpoints, must bracket every computed value:
    C1 n^r1 d^n <= c_n <= C2 n^r2 d^n. A wrong d makes u_n log-convex or
    log-concave enough that the chord fit fails in the interior. All
    comparisons are exact rational inequalities; nothing here claims a limit.
    """
    values = list(values)
    if len(values) < 3:
        raise ValidationError("need at least three codimension values")
    if any(v < 0 for v in values):
        raise ValidationError("codimensions are nonnegative")
    # once a codimension hits zero the algebra is nilpotent and stays at zero
    if 0 in values:
        first = values.index(0)
        if any(v != 0 for v in values[first:]):
            raise ValidationError("zero followed by a nonzero codimension is impossible")
        return ExponentVerdict(predicted_d, True, None,
                               message="nilpotent, exponent undefined")
    if predicted_d is None:
        return ExponentVerdict(None, False, None, message="no predicted exponent")
    if predicted_d < 1:
        raise ValidationError("predicted exponent must be a positive integer")
    d = Fraction(predicted_d)
    u = [Fraction(v) / d ** (i + 1) for i, v in enumerate(values)]
    N = len(u)
    ratio = u[N - 1] / u[0]                    # = N^(chord slope)
    r1 = None
    for r in range(_POWER_WINDOW, -_POWER_WINDOW - 1, -1):
        if Fraction(N) ** r <= ratio:
            r1 = r
            break
    r2 = None
    for r in range(-_POWER_WINDOW, _POWER_WINDOW + 1):
        if ratio <= Fraction(N) ** r:
            r2 = r
            break
    if r1 is None or r2 is None:
        return ExponentVerdict(predicted_d, False, False,
                               message="endpoint slope outside the power window")
    c2 = max(u[0], u[N - 1] / Fraction(N) ** r2)
    c1 = min(u[0], u[N - 1] / Fraction(N) ** r1)
    ok = True
    for i, un in enumerate(u):
        n = Fraction(i + 1)
        if not (c1 * n ** r1 <= un <= c2 * n ** r2):
            ok = False
            break
    msg = (f"consistent with exponent {predicted_d}: "
           f"{c1} * n^{r1} * {predicted_d}^n <= c_n <= {c2} * n^{r2} * {predicted_d}^n "
           f"over n = 1..{N}") if ok else (
           f"no endpoint-anchored bracket around {predicted_d}^n fits the range")
    return ExponentVerdict(predicted_d, False, ok, r1, r2, c1, c2, msg)


def codimension_report(A: GradedAlgebra, n_max: int, mode: str = "gr",
                       predicted_d: int | None = None,
                       max_n: int = DEFAULT_MAX_N,
                       max_blocks: int = DEFAULT_MAX_BLOCKS) -> CodimReport:
    """Codimension table c_1..c_{n_max} with block statistics, exact roots,
    ratios and (when requested) the growth verdict."""
    if mode not in ("gr", "h"):
        raise ValidationError("mode must be 'gr' or 'h'")
    values = []
    per_n = []
    shortcuts = []
    m = len(A.support)
    for n in range(1, n_max + 1):
        short = nilpotent_shortcut(A, n)
        if short is not None:
            values.append(0)
            shortcuts.append(n)
            per_n.append({"n": n, "assignments": m ** n, "computed": 0,
                          "nonzero_blocks": 0})
            continue
        _guard(A, n, max_n, max_blocks)
        if mode == "gr":
            blocks = [codim_block(A, degs) for degs in iproduct(A.support, repeat=n)]
            values.append(sum(blocks))
            per_n.append({"n": n, "assignments": m ** n, "computed": len(blocks),
                          "nonzero_blocks": sum(1 for b in blocks if b),
                          "max_block_rank": max(blocks, default=0)})
        else:
            values.append(functional_codimension(A, n, max_n, max_blocks))
            per_n.append({"n": n, "assignments": m ** n, "computed": m ** n})
    roots = [decimal_root(v, i + 1) if v > 0 else "0.0000" for i, v in enumerate(values)]
    ratios = [Fraction(values[i + 1], values[i]) if values[i] else None
              for i in range(len(values) - 1)]
    verdict = exponent_estimate(values, predicted_d) if len(values) >= 3 else None
    return CodimReport(mode, values, per_n, roots, ratios, verdict, shortcuts)
