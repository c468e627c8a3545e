"""Constructions of finite unital rings.

Each constructor compiles full operation tables eagerly (the kernel caps
the element count), attaches a provenance record describing how the ring
was built, and assigns each element a structural display name.  Element
indices follow a canonical mixed-radix encoding per construction, most
significant component first, so encode/decode round-trips are exact and
reports are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import analysis
from .kernel import (
    CapacityError,
    ConstructionError,
    Element,
    ElementSet,
    FiniteRing,
    MalformedTableError,
    element_capacity,
)


def _check_capacity(size: int, what: str) -> None:
    cap = element_capacity()
    if size > cap:
        raise CapacityError(f"{what} would have {size} elements, exceeding the cap {cap}")


# -- provenance records -------------------------------------------------------


@dataclass(eq=False)
class ZnProvenance:
    kind = "zn"
    n: int

    def spell(self) -> str:
        return f"Z{self.n}"


@dataclass(eq=False)
class TableProvenance:
    kind = "table"
    label: str

    def spell(self) -> str:
        return f"table:{self.label}"


@dataclass(eq=False)
class ProductProvenance:
    kind = "product"
    left: FiniteRing
    right: FiniteRing

    def spell(self) -> str:
        return f"prod({self.left.spell()}, {self.right.spell()})"


@dataclass(eq=False)
class MatrixProvenance:
    # kind is "matrix" for full k x k rings, "upper_triangular" otherwise
    kind: str
    k: int
    base: FiniteRing
    positions: list[tuple[int, int]]
    place_values: list[int]
    grid: np.ndarray  # (size, k, k) base indices, fixed zeros included

    def spell(self) -> str:
        head = "M" if self.kind == "matrix" else "T"
        return f"{head}({self.k}, {self.base.spell()})"


@dataclass(eq=False)
class HProvenance:
    kind = "h"
    base: FiniteRing
    s: int
    t: int
    c_of: np.ndarray
    e_of: np.ndarray
    f_of: np.ndarray
    d_of: np.ndarray
    a_of: np.ndarray

    def spell(self) -> str:
        return f"H({self.s}, {self.t}, {self.base.spell()})"


@dataclass(eq=False)
class CornerProvenance:
    kind = "corner"
    parent: FiniteRing
    e: int
    members: np.ndarray  # ascending parent indices

    def spell(self) -> str:
        return f"corner({self.parent.spell()}, {self.e})"


@dataclass(eq=False)
class DorrohProvenance:
    kind = "dorroh"
    base: FiniteRing
    action: "BimoduleRingAction"
    v_spell: str

    def spell(self) -> str:
        return f"dorroh({self.base.spell()}, {self.v_spell})"


@dataclass(eq=False)
class QuotientProvenance:
    kind = "quotient"
    parent: FiniteRing
    ideal: ElementSet
    generators: tuple[int, ...]
    representatives: np.ndarray  # ascending parent indices, one per coset
    rep_of: np.ndarray  # parent index -> minimal representative of its coset

    def spell(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"quot({self.parent.spell()}, {gens})"


# -- elementary constructions ---------------------------------------------------


def zn(n: int) -> FiniteRing:
    """The integers modulo n, for n >= 2."""
    if n < 2:
        raise ConstructionError(f"Z{n} is not a unital ring with one != zero")
    _check_capacity(n, f"Z{n}")
    arange = np.arange(n)
    add = (arange[:, None] + arange[None, :]) % n
    mul = (arange[:, None] * arange[None, :]) % n
    return FiniteRing(
        n,
        add,
        mul,
        zero=0,
        one=1,
        provenance=ZnProvenance(n),
        element_names=[str(i) for i in range(n)],
    )


def table_ring(source, label: str | None = None) -> FiniteRing:
    """Build a ring from explicit tables.

    ``source`` is a path to a JSON file or an already-parsed dict with
    keys size, add, mul, zero, one (tables are 0-based, row-major).
    Structural defects raise MalformedTableError; whether the tables
    satisfy the ring axioms is validate_ring's question, so defective
    axioms load fine and are reported there.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        if label is None:
            label = path.name
        try:
            text = path.read_text()
        except OSError as exc:
            raise MalformedTableError(f"cannot read table file {path}: {exc}")
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedTableError(f"table file {path} is not valid JSON: {exc}")
    else:
        data = source
        if label is None:
            label = "<inline>"
    if not isinstance(data, dict):
        raise MalformedTableError("table data must be a JSON object")
    missing = [key for key in ("size", "add", "mul", "zero", "one") if key not in data]
    if missing:
        raise MalformedTableError(f"table data is missing keys: {', '.join(missing)}")
    size = data["size"]
    if not isinstance(size, int) or size < 1:
        raise MalformedTableError(f"table size must be a positive integer, got {size!r}")
    _check_capacity(size, f"table ring {label}")
    zero = data["zero"]
    one = data["one"]
    if not isinstance(zero, int) or not isinstance(one, int):
        raise MalformedTableError("zero and one must be element indices")
    return FiniteRing(
        size,
        data["add"],
        data["mul"],
        zero=zero,
        one=one,
        provenance=TableProvenance(label),
    )


def product(left: FiniteRing, right: FiniteRing) -> FiniteRing:
    """Direct product; index of (r, s) is r * |right| + s."""
    n = left.size * right.size
    _check_capacity(n, f"prod({left.spell()}, {right.spell()})")
    sn = right.size
    arange = np.arange(n)
    rs = arange // sn
    ss = arange % sn
    add = left.add_table[rs[:, None], rs[None, :]].astype(np.int64) * sn
    add += right.add_table[ss[:, None], ss[None, :]]
    mul = left.mul_table[rs[:, None], rs[None, :]].astype(np.int64) * sn
    mul += right.mul_table[ss[:, None], ss[None, :]]
    names = [
        f"({left.element_name(int(r))}, {right.element_name(int(s))})"
        for r, s in zip(rs, ss)
    ]
    return FiniteRing(
        n,
        add,
        mul,
        zero=left.zero * sn + right.zero,
        one=left.one * sn + right.one,
        provenance=ProductProvenance(left, right),
        element_names=names,
    )


def product_components(ring: FiniteRing, x: Element) -> tuple[int, int]:
    prov = ring.provenance
    if not isinstance(prov, ProductProvenance):
        raise ConstructionError("ring was not built by product()")
    ring._check_index(x)
    return divmod(x, prov.right.size)


def product_encode(ring: FiniteRing, r: int, s: int) -> int:
    prov = ring.provenance
    if not isinstance(prov, ProductProvenance):
        raise ConstructionError("ring was not built by product()")
    prov.left._check_index(r)
    prov.right._check_index(s)
    return r * prov.right.size + s


# -- matrix-shaped constructions -------------------------------------------------


def _matrix_like(base: FiniteRing, k: int, positions: list[tuple[int, int]], kind: str) -> FiniteRing:
    m = len(positions)
    n = base.size**m
    head = "M" if kind == "matrix" else "T"
    _check_capacity(n, f"{head}({k}, {base.spell()})")
    place_values = [base.size ** (m - 1 - p) for p in range(m)]
    arange = np.arange(n)
    grid = np.full((n, k, k), base.zero, dtype=np.int32)
    for p, (i, j) in enumerate(positions):
        grid[:, i, j] = (arange // place_values[p]) % base.size

    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for p, (i, j) in enumerate(positions):
        col = grid[:, i, j]
        add += base.add_table[col[:, None], col[None, :]].astype(np.int64) * place_values[p]
        acc = np.full((n, n), base.zero, dtype=np.int32)
        for l in range(k):
            term = base.mul_table[grid[:, i, l][:, None], grid[:, l, j][None, :]]
            acc = base.add_table[acc, term]
        mul += acc.astype(np.int64) * place_values[p]

    prov = MatrixProvenance(kind, k, base, positions, place_values, grid)
    zero = sum(base.zero * pv for pv in place_values)
    one = sum(
        (base.one if i == j else base.zero) * pv
        for (i, j), pv in zip(positions, place_values)
    )
    names = [_matrix_name(base, grid[x]) for x in range(n)]
    ring = FiniteRing(n, add, mul, zero=zero, one=one, provenance=prov, element_names=names)
    grid.flags.writeable = False
    return ring


def _matrix_name(base: FiniteRing, grid_x: np.ndarray) -> str:
    rows = []
    for row in grid_x:
        rows.append("[" + ",".join(base.element_name(int(v)) for v in row) + "]")
    return "[" + ",".join(rows) + "]"


def matrix_ring(k: int, base: FiniteRing) -> FiniteRing:
    """Full k x k matrices over the base ring, row-major mixed radix."""
    if k < 1:
        raise ConstructionError("matrix dimension must be at least 1")
    positions = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_like(base, k, positions, "matrix")


def upper_triangular(k: int, base: FiniteRing) -> FiniteRing:
    """Upper-triangular k x k matrices over the base ring."""
    if k < 1:
        raise ConstructionError("matrix dimension must be at least 1")
    positions = [(i, j) for i in range(k) for j in range(k) if i <= j]
    return _matrix_like(base, k, positions, "upper_triangular")


def matrix_entries(ring: FiniteRing, x: Element) -> tuple[tuple[int, ...], ...]:
    """Decode an element of a matrix-shaped ring into its k x k entry grid."""
    prov = ring.provenance
    if not isinstance(prov, MatrixProvenance):
        raise ConstructionError("ring was not built by matrix_ring() or upper_triangular()")
    ring._check_index(x)
    return tuple(tuple(int(v) for v in row) for row in prov.grid[x])


def matrix_encode(ring: FiniteRing, grid) -> int:
    """Encode a k x k grid of base indices into an element index."""
    prov = ring.provenance
    if not isinstance(prov, MatrixProvenance):
        raise ConstructionError("ring was not built by matrix_ring() or upper_triangular()")
    k = prov.k
    grid = [list(row) for row in grid]
    if len(grid) != k or any(len(row) != k for row in grid):
        raise ConstructionError(f"expected a {k}x{k} grid")
    index = 0
    seen = set()
    for (i, j), pv in zip(prov.positions, prov.place_values):
        prov.base._check_index(grid[i][j])
        index += grid[i][j] * pv
        seen.add((i, j))
    for i in range(k):
        for j in range(k):
            if (i, j) not in seen and grid[i][j] != prov.base.zero:
                raise ConstructionError(
                    f"entry ({i}, {j}) must be the base zero in this construction"
                )
    return index


def matrix_unit_index(ring: FiniteRing, i: int, j: int) -> int:
    """Index of the matrix with the base one at (i, j) and zeros elsewhere."""
    prov = ring.provenance
    if not isinstance(prov, MatrixProvenance):
        raise ConstructionError("ring was not built by matrix_ring() or upper_triangular()")
    grid = [[prov.base.zero] * prov.k for _ in range(prov.k)]
    grid[i][j] = prov.base.one
    return matrix_encode(ring, grid)


# -- the constrained 3 x 3 subring ------------------------------------------------


def h_ring(s: Element, t: Element, base: FiniteRing) -> FiniteRing:
    """The subring of 3 x 3 matrices

        [[a, 0, 0],
         [c, d, e],
         [0, 0, f]]

    over the base ring, constrained by a - d = s*c and d - f = t*e for
    fixed central units s and t.  Elements are stored as the free triple
    (c, e, f), most significant first; the dependent entries are
    d = f + t*e and a = d + s*c.  Size is |base|^3, not |base|^9.
    """
    base._check_index(s)
    base._check_index(t)
    s_central = bool(analysis.center_mask(base)[s])
    t_central = bool(analysis.center_mask(base)[t])
    if not (s_central and base.is_unit(s)):
        raise ConstructionError(f"s (index {s}) must be a central unit of the base ring")
    if not (t_central and base.is_unit(t)):
        raise ConstructionError(f"t (index {t}) must be a central unit of the base ring")
    bs = base.size
    n = bs**3
    _check_capacity(n, f"H({s}, {t}, {base.spell()})")

    arange = np.arange(n)
    c_of = (arange // (bs * bs)).astype(np.int32)
    e_of = ((arange // bs) % bs).astype(np.int32)
    f_of = (arange % bs).astype(np.int32)
    d_of = base.add_table[f_of, base.mul_table[t, e_of]]
    a_of = base.add_table[d_of, base.mul_table[s, c_of]]

    addc = base.add_table[c_of[:, None], c_of[None, :]].astype(np.int64)
    adde = base.add_table[e_of[:, None], e_of[None, :]].astype(np.int64)
    addf = base.add_table[f_of[:, None], f_of[None, :]].astype(np.int64)
    add = (addc * bs + adde) * bs + addf

    # 3 x 3 matrix product restricted to the stored pattern:
    # c' = c1*a2 + d1*c2, e' = d1*e2 + e1*f2, f' = f1*f2
    cprod = base.add_table[
        base.mul_table[c_of[:, None], a_of[None, :]],
        base.mul_table[d_of[:, None], c_of[None, :]],
    ].astype(np.int64)
    eprod = base.add_table[
        base.mul_table[d_of[:, None], e_of[None, :]],
        base.mul_table[e_of[:, None], f_of[None, :]],
    ].astype(np.int64)
    fprod = base.mul_table[f_of[:, None], f_of[None, :]].astype(np.int64)
    mul = (cprod * bs + eprod) * bs + fprod

    z = base.zero
    zero = (z * bs + z) * bs + z
    one = (z * bs + z) * bs + base.one

    names = []
    for x in range(n):
        a = base.element_name(int(a_of[x]))
        c = base.element_name(int(c_of[x]))
        d = base.element_name(int(d_of[x]))
        e = base.element_name(int(e_of[x]))
        f = base.element_name(int(f_of[x]))
        zname = base.element_name(z)
        names.append(f"[[{a},{zname},{zname}],[{c},{d},{e}],[{zname},{zname},{f}]]")

    for vec in (c_of, e_of, f_of, d_of, a_of):
        vec.flags.writeable = False
    prov = HProvenance(base, s, t, c_of, e_of, f_of, d_of, a_of)
    return FiniteRing(n, add, mul, zero=zero, one=one, provenance=prov, element_names=names)


def h_components(ring: FiniteRing, x: Element) -> tuple[int, int, int, int, int]:
    """Return (a, c, d, e, f) for an element of an h_ring."""
    prov = ring.provenance
    if not isinstance(prov, HProvenance):
        raise ConstructionError("ring was not built by h_ring()")
    ring._check_index(x)
    return (
        int(prov.a_of[x]),
        int(prov.c_of[x]),
        int(prov.d_of[x]),
        int(prov.e_of[x]),
        int(prov.f_of[x]),
    )


def h_encode(ring: FiniteRing, c: int, e: int, f: int) -> int:
    prov = ring.provenance
    if not isinstance(prov, HProvenance):
        raise ConstructionError("ring was not built by h_ring()")
    for v in (c, e, f):
        prov.base._check_index(v)
    bs = prov.base.size
    return (c * bs + e) * bs + f


def h_matrix(ring: FiniteRing, x: Element) -> tuple[tuple[int, ...], ...]:
    """Expand an h_ring element to its full 3 x 3 grid of base indices."""
    a, c, d, e, f = h_components(ring, x)
    z = ring.provenance.base.zero
    return ((a, z, z), (c, d, e), (z, z, f))


# -- Dorroh-style extensions -------------------------------------------------------


class NonUnitalRing:
    """A finite ring that need not have an identity, given by tables.

    Used as the V part of a Dorroh extension; the construction never
    assumes or uses an identity in V.
    """

    __slots__ = ("size", "add_table", "mul_table", "neg_table", "zero", "names")

    def __init__(self, size: int, add, mul, zero: int, names: list[str] | None = None):
        if not isinstance(size, int) or size < 1:
            raise MalformedTableError("V must have at least one element")
        add_arr = np.array(add, dtype=np.int32)
        mul_arr = np.array(mul, dtype=np.int32)
        for name, table in (("add", add_arr), ("mul", mul_arr)):
            if table.shape != (size, size):
                raise MalformedTableError(f"V {name} table must be {size}x{size}")
            if size and (int(table.min()) < 0 or int(table.max()) >= size):
                raise MalformedTableError(f"V {name} table entry out of range")
        if not isinstance(zero, int) or not (0 <= zero < size):
            raise MalformedTableError(f"V zero index {zero!r} out of range")
        add_arr.flags.writeable = False
        mul_arr.flags.writeable = False
        self.size = size
        self.add_table = add_arr
        self.mul_table = mul_arr
        self.zero = zero
        neg = np.argmax(add_arr == zero, axis=1).astype(np.int32)
        neg.flags.writeable = False
        self.neg_table = neg
        if names is not None and len(names) != size:
            raise MalformedTableError("V names length does not match size")
        self.names = names

    def element_name(self, v: int) -> str:
        if self.names is None:
            return str(v)
        return self.names[v]


@dataclass(eq=False)
class BimoduleRingAction:
    """Two-sided action of a base ring on a (possibly non-unital) ring V.

    ``left[r, v]`` is r.v and ``right[v, r]`` is v.r, both V indices.
    """

    v: NonUnitalRing
    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        self.left = np.array(self.left, dtype=np.int32)
        self.right = np.array(self.right, dtype=np.int32)
        self.left.flags.writeable = False
        self.right.flags.writeable = False


def _validate_nonunital(v: NonUnitalRing) -> list[str]:
    errs = []
    n = v.size
    add = v.add_table
    mul = v.mul_table
    arange = np.arange(n)
    if (add != add.T).any():
        at = np.argwhere(add != add.T)[0]
        errs.append(f"V addition is not commutative at ({at[0]}, {at[1]})")
    if (add[v.zero] != arange).any():
        errs.append("V zero is not an additive identity")
    if (~(add == v.zero).any(axis=1)).any():
        errs.append("V has an element without an additive inverse")
    for x in range(n):
        if (add[add[x]] != add[x][add]).any():
            errs.append(f"V addition is not associative (x={x})")
            break
    for x in range(n):
        if (mul[mul[x]] != mul[x][mul]).any():
            errs.append(f"V multiplication is not associative (x={x})")
            break
    for x in range(n):
        if (mul[x][add] != add[mul[x][:, None], mul[x][None, :]]).any():
            errs.append(f"V left distributivity fails (x={x})")
            break
        col = mul[:, x]
        if (col[add] != add[col[:, None], col[None, :]]).any():
            errs.append(f"V right distributivity fails (x={x})")
            break
    return errs


def validate_bimodule_action(base: FiniteRing, action: BimoduleRingAction) -> list[str]:
    """Exhaustively check every law a Dorroh extension relies on.

    Covers: V is a ring (without needing a V-identity); both actions are
    biadditive and unital over the base one; the module associativity
    laws (r*s).v = r.(s.v), v.(r*s) = (v.r).s, (r.v).s = r.(v.s); and the
    three ring-compatibility laws (v w).r = v (w.r), (v.r) w = v (r.w),
    (r.v) w = r.(v w).  Returns human-readable violations, empty when all
    laws hold.
    """
    errs = _validate_nonunital(action.v)
    v = action.v
    left = action.left
    right = action.right
    n = base.size
    vn = v.size
    if left.shape != (n, vn):
        return errs + [f"left action table must be {n}x{vn}"]
    if right.shape != (vn, n):
        return errs + [f"right action table must be {vn}x{n}"]
    if left.size and (int(left.min()) < 0 or int(left.max()) >= vn):
        return errs + ["left action table entry out of range"]
    if right.size and (int(right.min()) < 0 or int(right.max()) >= vn):
        return errs + ["right action table entry out of range"]
    varange = np.arange(vn)

    if (left[base.one] != varange).any():
        errs.append("1.v == v fails")
    if (right[:, base.one] != varange).any():
        errs.append("v.1 == v fails")

    for r in range(n):
        lr = left[r]
        if (lr[v.add_table] != v.add_table[lr[:, None], lr[None, :]]).any():
            errs.append(f"r.(v+w) == r.v + r.w fails (r={r})")
            break
    for r in range(n):
        if (left[base.add_table[r]] != v.add_table[left[r][None, :], left]).any():
            errs.append(f"(r+s).v == r.v + s.v fails (r={r})")
            break
    for r in range(n):
        rr = right[:, r]
        if (rr[v.add_table] != v.add_table[rr[:, None], rr[None, :]]).any():
            errs.append(f"(v+w).r == v.r + w.r fails (r={r})")
            break
    for r in range(n):
        if (right[:, base.add_table[r]] != v.add_table[right[:, r][:, None], right]).any():
            errs.append(f"v.(r+s) == v.r + v.s fails (r={r})")
            break

    for r in range(n):
        if (left[base.mul_table[r]] != left[r][left]).any():
            errs.append(f"(r*s).v == r.(s.v) fails (r={r})")
            break
    for r in range(n):
        if (right[:, base.mul_table[r]] != right[right[:, r], :]).any():
            errs.append(f"v.(r*s) == (v.r).s fails (r={r})")
            break
    for r in range(n):
        if (right[left[r], :] != left[r][right]).any():
            errs.append(f"(r.v).s == r.(v.s) fails (r={r})")
            break

    for w in range(vn):
        # (v w).r == v (w.r)
        if (right[v.mul_table[:, w], :] != v.mul_table[:, right[w]]).any():
            errs.append(f"(v*w).r == v*(w.r) fails (w={w})")
            break
    for x in range(vn):
        # (v.r) w == v (r.w)
        if (v.mul_table[right[x], :][:, :] != v.mul_table[x][left]).any():
            errs.append(f"(v.r)*w == v*(r.w) fails (v={x})")
            break
    for r in range(n):
        # (r.v) w == r.(v w)
        if (v.mul_table[left[r], :] != left[r][v.mul_table]).any():
            errs.append(f"(r.v)*w == r.(v*w) fails (r={r})")
            break
    return errs


def self_action(base: FiniteRing) -> BimoduleRingAction:
    """V is the base ring itself (identity forgotten), acting by ring product."""
    v = NonUnitalRing(
        base.size,
        base.add_table,
        base.mul_table,
        base.zero,
        names=[base.element_name(i) for i in range(base.size)],
    )
    return BimoduleRingAction(v=v, left=base.mul_table, right=base.mul_table)


def zero_action(base: FiniteRing) -> BimoduleRingAction:
    """V is the one-element zero ring."""
    v = NonUnitalRing(1, [[0]], [[0]], 0, names=["0"])
    left = np.zeros((base.size, 1), dtype=np.int32)
    right = np.zeros((1, base.size), dtype=np.int32)
    return BimoduleRingAction(v=v, left=left, right=right)


def ideal_action(base: FiniteRing, generators) -> BimoduleRingAction:
    """V is the two-sided ideal generated by the given elements, with
    inherited operations and the base ring acting by multiplication."""
    members = np.array(sorted(ideal_generated(base, generators).indices()), dtype=np.int32)
    lookup = np.full(base.size, -1, dtype=np.int32)
    lookup[members] = np.arange(len(members), dtype=np.int32)
    sub = np.ix_(members, members)
    v = NonUnitalRing(
        len(members),
        lookup[base.add_table[sub]],
        lookup[base.mul_table[sub]],
        int(lookup[base.zero]),
        names=[base.element_name(int(m)) for m in members],
    )
    left = lookup[base.mul_table[:, members]]
    right = lookup[base.mul_table[members, :]]
    return BimoduleRingAction(v=v, left=left, right=right)


def dorroh(base: FiniteRing, action: BimoduleRingAction, v_spell: str = "custom") -> FiniteRing:
    """Extension of the base ring by a bimodule-ring V.

    Elements are pairs (r, v), index r * |V| + v, with

        (r, v) + (s, w) = (r + s, v + w)
        (r, v) * (s, w) = (r * s, r.w + v.s + v * w)

    and identity (1, 0).  All action laws are validated exhaustively
    before the tables are compiled; V is never assumed to have an
    identity of its own.
    """
    errs = validate_bimodule_action(base, action)
    if errs:
        raise ConstructionError(f"invalid bimodule action: {errs[0]}")
    v = action.v
    n = base.size * v.size
    _check_capacity(n, f"dorroh({base.spell()}, {v_spell})")
    vn = v.size
    arange = np.arange(n)
    rvec = (arange // vn).astype(np.int32)
    vvec = (arange % vn).astype(np.int32)

    add = base.add_table[rvec[:, None], rvec[None, :]].astype(np.int64) * vn
    add += v.add_table[vvec[:, None], vvec[None, :]]

    rpart = base.mul_table[rvec[:, None], rvec[None, :]].astype(np.int64)
    lw = action.left[rvec[:, None], vvec[None, :]]
    vs = action.right[vvec[:, None], rvec[None, :]]
    vw = v.mul_table[vvec[:, None], vvec[None, :]]
    vpart = v.add_table[v.add_table[lw, vs], vw]
    mul = rpart * vn + vpart

    names = [
        f"({base.element_name(int(r))}, {v.element_name(int(w))})"
        for r, w in zip(rvec, vvec)
    ]
    prov = DorrohProvenance(base, action, v_spell)
    return FiniteRing(
        n,
        add,
        mul,
        zero=base.zero * vn + v.zero,
        one=base.one * vn + v.zero,
        provenance=prov,
        element_names=names,
    )


def dorroh_components(ring: FiniteRing, x: Element) -> tuple[int, int]:
    prov = ring.provenance
    if not isinstance(prov, DorrohProvenance):
        raise ConstructionError("ring was not built by dorroh()")
    ring._check_index(x)
    return divmod(x, prov.action.v.size)


# -- corners, ideals, quotients ---------------------------------------------------


def corner(base: FiniteRing, e: Element) -> FiniteRing:
    """The corner ring e*R*e with identity e, for a nonzero idempotent e."""
    base._check_index(e)
    if base.mul(e, e) != e:
        raise ConstructionError(f"element {e} is not idempotent")
    if e == base.zero:
        raise ConstructionError("corner at zero is the zero ring and has no identity")
    compress_left = base.mul_table[e]
    exe = base.mul_table[compress_left, e]
    members = np.unique(exe)
    lookup = np.full(base.size, -1, dtype=np.int32)
    lookup[members] = np.arange(len(members), dtype=np.int32)
    sub = np.ix_(members, members)
    add = lookup[base.add_table[sub]]
    mul = lookup[base.mul_table[sub]]
    if (add < 0).any() or (mul < 0).any():
        raise ConstructionError("corner set is not closed; the base tables are defective")
    names = [base.element_name(int(m)) for m in members]
    prov = CornerProvenance(base, e, members)
    return FiniteRing(
        len(members),
        add,
        mul,
        zero=int(lookup[base.zero]),
        one=int(lookup[e]),
        provenance=prov,
        element_names=names,
    )


def ideal_generated(base: FiniteRing, generators) -> ElementSet:
    """The smallest two-sided ideal containing the given elements.

    Saturates under addition of members and multiplication by arbitrary
    ring elements on both sides; negation is covered by multiplication
    with -1.
    """
    mask = np.zeros(base.size, dtype=bool)
    mask[base.zero] = True
    for g in generators:
        base._check_index(int(g))
        mask[int(g)] = True
    while True:
        members = np.flatnonzero(mask)
        candidates = np.concatenate(
            [
                base.add_table[np.ix_(members, members)].ravel(),
                base.mul_table[:, members].ravel(),
                base.mul_table[members, :].ravel(),
            ]
        )
        new_mask = mask.copy()
        new_mask[candidates] = True
        if (new_mask == mask).all():
            return ElementSet.from_bool_array(base, mask)
        mask = new_mask


def quotient(base: FiniteRing, ideal: ElementSet) -> FiniteRing:
    """The quotient ring by a verified two-sided ideal.

    Cosets are represented by their minimum element index.  Quotients
    that would collapse one onto zero (ideal containing one) are
    rejected, keeping every constructed ring unital and nonzero.
    """
    if ideal.ring is not base:
        raise ConstructionError("ideal belongs to a different ring")
    members = np.array(ideal.indices(), dtype=np.int64)
    if base.zero not in ideal:
        raise ConstructionError("not an ideal: missing zero")
    closed_add = ideal.bool_array()[base.add_table[np.ix_(members, members)]].all()
    if not closed_add:
        raise ConstructionError("not an ideal: not closed under addition")
    mask = ideal.bool_array()
    if not mask[base.neg_table[members]].all():
        raise ConstructionError("not an ideal: not closed under negation")
    if not mask[base.mul_table[:, members]].all():
        raise ConstructionError("not an ideal: not closed under left multiplication")
    if not mask[base.mul_table[members, :]].all():
        raise ConstructionError("not an ideal: not closed under right multiplication")
    if base.one in ideal:
        raise ConstructionError("quotient by the whole ring is the zero ring; rejected")

    cosets = base.add_table[:, members]
    rep_of = cosets.min(axis=1).astype(np.int32)
    representatives = np.unique(rep_of)
    lookup = np.full(base.size, -1, dtype=np.int32)
    lookup[representatives] = np.arange(len(representatives), dtype=np.int32)
    sub = np.ix_(representatives, representatives)
    add = lookup[rep_of[base.add_table[sub]]]
    mul = lookup[rep_of[base.mul_table[sub]]]
    names = [f"[{base.element_name(int(r))}]" for r in representatives]
    gens = tuple(int(g) for g in members if g != base.zero)
    rep_of.flags.writeable = False
    prov = QuotientProvenance(base, ideal, gens, representatives, rep_of)
    return FiniteRing(
        len(representatives),
        add,
        mul,
        zero=int(lookup[rep_of[base.zero]]),
        one=int(lookup[rep_of[base.one]]),
        provenance=prov,
        element_names=names,
    )


def quotient_by_generators(base: FiniteRing, generators) -> FiniteRing:
    ring = quotient(base, ideal_generated(base, generators))
    ring.provenance.generators = tuple(int(g) for g in generators)
    return ring


def quotient_project(ring: FiniteRing, parent_x: Element) -> int:
    """Image of a parent element under the quotient projection."""
    prov = ring.provenance
    if not isinstance(prov, QuotientProvenance):
        raise ConstructionError("ring was not built by quotient()")
    prov.parent._check_index(parent_x)
    rep = int(prov.rep_of[parent_x])
    return int(np.searchsorted(prov.representatives, rep))


def is_isomorphic_to_z2(ring: FiniteRing) -> bool:
    """True exactly for two-element rings.

    A unital ring with two elements has 1 != 0 forced at construction,
    and its tables are forced as well: 1 + 1 must be 0 (1 + 1 == 1 would
    cancel to 1 == 0), so the ring is the two-element field.
    """
    return ring.size == 2
