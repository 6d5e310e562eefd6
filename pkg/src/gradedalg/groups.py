"""Grading groups: trivial, finite cyclic, finite table groups, free groups on
reduced words, and finite direct products.

Elements are opaque labels with multiplication; nothing here assumes the group
is finite except where explicitly stated (`elements`). Free-group elements are
kept as reduced words, so equal elements always have identical keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .errors import GroupMismatchError, ValidationError


@dataclass(frozen=True)
class GroupElem:
    group: "Group"
    key: object

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        return self.group.mul(self, other)

    def inverse(self) -> "GroupElem":
        return self.group.inv(self)

    def is_identity(self) -> bool:
        return self.key == self.group.identity().key

    def __repr__(self):
        return self.group.format_elem(self)


class Group:
    kind = "?"
    is_finite = False

    def identity(self) -> GroupElem:
        raise NotImplementedError

    def mul(self, a: GroupElem, b: GroupElem) -> GroupElem:
        raise NotImplementedError

    def inv(self, a: GroupElem) -> GroupElem:
        raise NotImplementedError

    def elem(self, key) -> GroupElem:
        raise NotImplementedError

    def elements(self) -> list[GroupElem]:
        raise ValidationError(f"{self.kind} group is not finite; cannot enumerate elements")

    def check_member(self, a: GroupElem):
        if a.group != self:
            raise GroupMismatchError(f"element of {a.group!r} used with {self!r}")

    def check_pair(self, a: GroupElem, b: GroupElem):
        self.check_member(a)
        self.check_member(b)

    def sort_key(self, a: GroupElem):
        """Deterministic total order on elements, used for stable output."""
        return a.key

    def format_elem(self, a: GroupElem) -> str:
        return f"{self.kind}:{a.key}"

    # JSON description fragment (see the CLI file format)

    def describe(self) -> dict:
        raise NotImplementedError

    def encode_elem(self, a: GroupElem):
        raise NotImplementedError

    def decode_elem(self, obj) -> GroupElem:
        raise NotImplementedError


class TrivialGroup(Group):
    kind = "trivial"
    is_finite = True

    def identity(self):
        return GroupElem(self, 0)

    def mul(self, a, b):
        self.check_pair(a, b)
        return GroupElem(self, 0)

    def inv(self, a):
        self.check_member(a)
        return GroupElem(self, 0)

    def elem(self, key):
        if key != 0:
            raise ValidationError("trivial group has the single key 0")
        return GroupElem(self, 0)

    def elements(self):
        return [self.identity()]

    def format_elem(self, a):
        return "e"

    def describe(self):
        return {"type": "trivial"}

    def encode_elem(self, a):
        return 0

    def decode_elem(self, obj):
        if obj not in (0, "e"):
            raise ValidationError(f"bad trivial-group element {obj!r}")
        return self.identity()

    def __eq__(self, other):
        return isinstance(other, TrivialGroup)

    def __hash__(self):
        return hash("trivial")

    def __repr__(self):
        return "TrivialGroup()"


class CyclicGroup(Group):
    kind = "cyclic"
    is_finite = True

    def __init__(self, n: int):
        if n < 1:
            raise ValidationError("cyclic group order must be >= 1")
        self.n = n

    def identity(self):
        return GroupElem(self, 0)

    def mul(self, a, b):
        self.check_pair(a, b)
        return GroupElem(self, (a.key + b.key) % self.n)

    def inv(self, a):
        self.check_member(a)
        return GroupElem(self, (-a.key) % self.n)

    def elem(self, key):
        if not isinstance(key, int):
            raise ValidationError(f"cyclic element key must be an int, got {key!r}")
        return GroupElem(self, key % self.n)

    def elements(self):
        return [GroupElem(self, k) for k in range(self.n)]

    def format_elem(self, a):
        return f"[{a.key} mod {self.n}]"

    def describe(self):
        return {"type": "cyclic", "n": self.n}

    def encode_elem(self, a):
        return a.key

    def decode_elem(self, obj):
        if not isinstance(obj, int):
            raise ValidationError(f"cyclic element must be an integer, got {obj!r}")
        return self.elem(obj)

    def __eq__(self, other):
        return isinstance(other, CyclicGroup) and other.n == self.n

    def __hash__(self):
        return hash(("cyclic", self.n))

    def __repr__(self):
        return f"CyclicGroup({self.n})"


class TableGroup(Group):
    """Finite group given by its multiplication table; the table is checked to
    be an actual group (identity, inverses, associativity) at construction."""

    kind = "table"
    is_finite = True

    def __init__(self, table, names=None):
        tbl = tuple(tuple(row) for row in table)
        n = len(tbl)
        if n == 0:
            raise ValidationError("empty multiplication table")
        for i, row in enumerate(tbl):
            if len(row) != n:
                raise ValidationError(f"table row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ValidationError(f"table entry ({i},{j}) = {v!r} out of range")
        ident = None
        for e in range(n):
            if all(tbl[e][x] == x and tbl[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValidationError("table has no identity element")
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if tbl[x][y] == ident and tbl[y][x] == ident:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise ValidationError(f"table element {x} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if tbl[tbl[a][b]][c] != tbl[a][tbl[b][c]]:
                        raise ValidationError(f"table is not associative at ({a},{b},{c})")
        self.table = tbl
        self.order = n
        self.identity_index = ident
        self.inverse_table = tuple(inv)
        self.names = tuple(names) if names else None

    def identity(self):
        return GroupElem(self, self.identity_index)

    def mul(self, a, b):
        self.check_pair(a, b)
        return GroupElem(self, self.table[a.key][b.key])

    def inv(self, a):
        self.check_member(a)
        return GroupElem(self, self.inverse_table[a.key])

    def elem(self, key):
        if not isinstance(key, int) or not 0 <= key < self.order:
            raise ValidationError(f"table element index {key!r} out of range")
        return GroupElem(self, key)

    def elements(self):
        return [GroupElem(self, k) for k in range(self.order)]

    def format_elem(self, a):
        if self.names:
            return self.names[a.key]
        return f"t{a.key}"

    def describe(self):
        return {"type": "table", "table": [list(r) for r in self.table]}

    def encode_elem(self, a):
        return a.key

    def decode_elem(self, obj):
        if not isinstance(obj, int):
            raise ValidationError(f"table element must be an integer index, got {obj!r}")
        return self.elem(obj)

    def __eq__(self, other):
        return isinstance(other, TableGroup) and other.table == self.table

    def __hash__(self):
        return hash(("table", self.table))

    def __repr__(self):
        return f"TableGroup(order={self.order})"


def _reduce_word(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class FreeGroup(Group):
    """Free group of a given rank; elements are reduced words stored as tuples
    of nonzero signed generator indices (+i for a_i, -i for its inverse)."""

    kind = "free"

    def __init__(self, rank: int):
        if rank < 1:
            raise ValidationError("free group rank must be >= 1")
        self.rank = rank

    def identity(self):
        return GroupElem(self, ())

    def mul(self, a, b):
        self.check_pair(a, b)
        return GroupElem(self, _reduce_word(a.key + b.key))

    def inv(self, a):
        self.check_member(a)
        return GroupElem(self, tuple(-x for x in reversed(a.key)))

    def elem(self, key):
        word = tuple(key)
        for x in word:
            if not isinstance(x, int) or x == 0 or abs(x) > self.rank:
                raise ValidationError(f"bad free-group letter {x!r}")
        if word != _reduce_word(word):
            raise ValidationError(f"word {word!r} is not reduced")
        return GroupElem(self, word)

    def word(self, letters) -> GroupElem:
        """Build an element from possibly unreduced letters."""
        return GroupElem(self, _reduce_word(tuple(letters)))

    def gens(self):
        return [GroupElem(self, (i,)) for i in range(1, self.rank + 1)]

    def sort_key(self, a):
        return (len(a.key), a.key)

    def format_elem(self, a):
        if not a.key:
            return "1"
        return ".".join(f"a{x}" if x > 0 else f"a{-x}'" for x in a.key)

    def describe(self):
        return {"type": "free", "rank": self.rank}

    def encode_elem(self, a):
        return self.format_elem(a) if a.key else ""

    def decode_elem(self, obj):
        if not isinstance(obj, str):
            raise ValidationError(f"free-group element must be a string, got {obj!r}")
        if obj in ("", "1"):
            return self.identity()
        letters = []
        for tok in obj.split("."):
            t = tok.strip()
            neg = t.endswith("'")
            if neg:
                t = t[:-1]
            if not t.startswith("a") or not t[1:].isdigit():
                raise ValidationError(f"bad free-group token {tok!r}")
            i = int(t[1:])
            if not 1 <= i <= self.rank:
                raise ValidationError(f"generator index {i} out of range in {obj!r}")
            letters.append(-i if neg else i)
        return self.word(letters)

    def __eq__(self, other):
        return isinstance(other, FreeGroup) and other.rank == self.rank

    def __hash__(self):
        return hash(("free", self.rank))

    def __repr__(self):
        return f"FreeGroup({self.rank})"


class ProductGroup(Group):
    kind = "product"

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise ValidationError("product group needs at least one factor")
        self.is_finite = all(f.is_finite for f in self.factors)

    def identity(self):
        return GroupElem(self, tuple(f.identity().key for f in self.factors))

    def mul(self, a, b):
        self.check_pair(a, b)
        key = tuple(f.mul(GroupElem(f, x), GroupElem(f, y)).key
                    for f, x, y in zip(self.factors, a.key, b.key))
        return GroupElem(self, key)

    def inv(self, a):
        self.check_member(a)
        return GroupElem(self, tuple(f.inv(GroupElem(f, x)).key
                                     for f, x in zip(self.factors, a.key)))

    def elem(self, key):
        key = tuple(key)
        if len(key) != len(self.factors):
            raise ValidationError("component count differs from factor count")
        return GroupElem(self, tuple(f.elem(k).key for f, k in zip(self.factors, key)))

    def elements(self):
        if not self.is_finite:
            raise ValidationError("product group is not finite; cannot enumerate elements")
        keys = [tuple(e.key for e in f.elements()) for f in self.factors]
        return [GroupElem(self, k) for k in iproduct(*keys)]

    def sort_key(self, a):
        return tuple(f.sort_key(GroupElem(f, x)) for f, x in zip(self.factors, a.key))

    def format_elem(self, a):
        parts = [f.format_elem(GroupElem(f, x)) for f, x in zip(self.factors, a.key)]
        return "(" + ", ".join(parts) + ")"

    def describe(self):
        return {"type": "product", "factors": [f.describe() for f in self.factors]}

    def encode_elem(self, a):
        return [f.encode_elem(GroupElem(f, x)) for f, x in zip(self.factors, a.key)]

    def decode_elem(self, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != len(self.factors):
            raise ValidationError(f"product element must list one entry per factor, got {obj!r}")
        return GroupElem(self, tuple(f.decode_elem(o).key for f, o in zip(self.factors, obj)))

    def __eq__(self, other):
        return isinstance(other, ProductGroup) and other.factors == self.factors

    def __hash__(self):
        return hash(("product", self.factors))

    def __repr__(self):
        return f"ProductGroup({list(self.factors)!r})"


def group_from_description(obj) -> Group:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValidationError(f"group description must be an object with a 'type', got {obj!r}")
    t = obj["type"]
    if t == "trivial":
        return TrivialGroup()
    if t == "cyclic":
        return CyclicGroup(int(obj["n"]))
    if t == "table":
        return TableGroup(obj["table"])
    if t == "free":
        return FreeGroup(int(obj["rank"]))
    if t == "product":
        return ProductGroup([group_from_description(f) for f in obj["factors"]])
    raise ValidationError(f"unknown group type {t!r}")
