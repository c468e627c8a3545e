"""A tiny spec language for naming rings on the command line.

Grammar (whitespace is free between tokens):

    spec    := "Z" INT
             | "table:" PATH
             | "prod(" spec "," spec ")"
             | "M(" INT "," spec ")"
             | "T(" INT "," spec ")"
             | "H(" INT "," INT "," spec ")"
             | "corner(" spec "," INT ")"
             | "dorroh(" spec "," dorrohV ")"
             | "quot(" spec "," INT ("," INT)* ")"
    dorrohV := "self" | "zero" | "ideal(" INT ("," INT)* ")"

Bare INTs after a spec are element indices of that ring; H's two INTs
are the indices of s and t in the base ring.  A PATH extends to the next
comma, closing parenthesis, or whitespace.  Parse errors carry 1-based
column positions.  Building is cached per canonical spelling, so a
corpus that mentions Z4 five times constructs it once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import constructions
from .kernel import ConstructionError, FiniteRing, RingError


class RingSpecError(RingError):
    """Ring-spec text failed to parse."""

    def __init__(self, message: str, column: int | None = None):
        if column is not None:
            message = f"column {column}: {message}"
        super().__init__(message)
        self.column = column


@dataclass
class BuildContext:
    """Where table paths resolve from, plus a shared construction cache."""

    base_dir: Path | None = None
    cache: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ZnSpec:
    n: int

    def canonical(self) -> str:
        return f"Z{self.n}"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        return constructions.zn(self.n)


@dataclass(frozen=True)
class TableSpec:
    path: str

    def canonical(self) -> str:
        return f"table:{self.path}"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        path = Path(self.path)
        if not path.is_absolute() and ctx.base_dir is not None:
            path = ctx.base_dir / path
        return constructions.table_ring(path, label=self.path)


@dataclass(frozen=True)
class ProdSpec:
    left: object
    right: object

    def canonical(self) -> str:
        return f"prod({self.left.canonical()}, {self.right.canonical()})"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        return constructions.product(build(self.left, ctx), build(self.right, ctx))


@dataclass(frozen=True)
class MatrixSpec:
    kind: str  # "matrix" or "upper_triangular"
    k: int
    inner: object

    def canonical(self) -> str:
        head = "M" if self.kind == "matrix" else "T"
        return f"{head}({self.k}, {self.inner.canonical()})"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        base = build(self.inner, ctx)
        if self.kind == "matrix":
            return constructions.matrix_ring(self.k, base)
        return constructions.upper_triangular(self.k, base)


@dataclass(frozen=True)
class HSpec:
    s: int
    t: int
    inner: object

    def canonical(self) -> str:
        return f"H({self.s}, {self.t}, {self.inner.canonical()})"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        return constructions.h_ring(self.s, self.t, build(self.inner, ctx))


@dataclass(frozen=True)
class CornerSpec:
    inner: object
    e: int

    def canonical(self) -> str:
        return f"corner({self.inner.canonical()}, {self.e})"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        return constructions.corner(build(self.inner, ctx), self.e)


@dataclass(frozen=True)
class DorrohSpec:
    inner: object
    v_kind: str  # "self" | "zero" | "ideal"
    gens: tuple[int, ...] = ()

    def v_canonical(self) -> str:
        if self.v_kind == "ideal":
            return f"ideal({', '.join(str(g) for g in self.gens)})"
        return self.v_kind

    def canonical(self) -> str:
        return f"dorroh({self.inner.canonical()}, {self.v_canonical()})"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        base = build(self.inner, ctx)
        if self.v_kind == "self":
            action = constructions.self_action(base)
        elif self.v_kind == "zero":
            action = constructions.zero_action(base)
        else:
            action = constructions.ideal_action(base, self.gens)
        return constructions.dorroh(base, action, v_spell=self.v_canonical())


@dataclass(frozen=True)
class QuotSpec:
    inner: object
    gens: tuple[int, ...]

    def canonical(self) -> str:
        return f"quot({self.inner.canonical()}, {', '.join(str(g) for g in self.gens)})"

    def construct(self, ctx: BuildContext) -> FiniteRing:
        base = build(self.inner, ctx)
        return constructions.quotient_by_generators(base, self.gens)


_PATH_STOPPERS = set(",) \t\r\n")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> RingSpecError:
        return RingSpecError(message, column=self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected an integer, found {found}")
        return int(self.text[start : self.pos])

    def parse_word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]

    def parse_int_list(self) -> tuple[int, ...]:
        values = [self.parse_int()]
        while True:
            self.skip_ws()
            if self.peek() == ",":
                self.pos += 1
                values.append(self.parse_int())
            else:
                return tuple(values)

    def parse_spec(self):
        self.skip_ws()
        start = self.pos
        head = self.parse_word()
        if not head:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected a ring spec, found {found}")

        if head[0] == "Z" and head[1:].isdigit():
            return ZnSpec(int(head[1:]))
        if head == "Z":
            self.pos = start + 1
            raise self.error("Z must be followed by a modulus, e.g. Z4")
        if head == "table":
            self.expect(":")
            pstart = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in _PATH_STOPPERS:
                self.pos += 1
            path = self.text[pstart : self.pos]
            if not path:
                raise self.error("table: needs a file path")
            return TableSpec(path)
        if head == "prod":
            self.expect("(")
            left = self.parse_spec()
            self.expect(",")
            right = self.parse_spec()
            self.expect(")")
            return ProdSpec(left, right)
        if head in ("M", "T"):
            self.expect("(")
            k = self.parse_int()
            self.expect(",")
            inner = self.parse_spec()
            self.expect(")")
            kind = "matrix" if head == "M" else "upper_triangular"
            return MatrixSpec(kind, k, inner)
        if head == "H":
            self.expect("(")
            s = self.parse_int()
            self.expect(",")
            t = self.parse_int()
            self.expect(",")
            inner = self.parse_spec()
            self.expect(")")
            return HSpec(s, t, inner)
        if head == "corner":
            self.expect("(")
            inner = self.parse_spec()
            self.expect(",")
            e = self.parse_int()
            self.expect(")")
            return CornerSpec(inner, e)
        if head == "dorroh":
            self.expect("(")
            inner = self.parse_spec()
            self.expect(",")
            spec = self.parse_dorroh_v(inner)
            self.expect(")")
            return spec
        if head == "quot":
            self.expect("(")
            inner = self.parse_spec()
            self.expect(",")
            gens = self.parse_int_list()
            self.expect(")")
            return QuotSpec(inner, gens)
        self.pos = start
        raise self.error(f"unknown construction {head!r}")

    def parse_dorroh_v(self, inner) -> DorrohSpec:
        self.skip_ws()
        word = self.parse_word()
        if word in ("self", "zero"):
            return DorrohSpec(inner, word)
        if word == "ideal":
            self.expect("(")
            gens = self.parse_int_list()
            self.expect(")")
            return DorrohSpec(inner, "ideal", gens)
        found = repr(word) if word else (repr(self.peek()) if self.peek() else "end of input")
        raise self.error(f"expected self, zero, or ideal(...), found {found}")


def parse_ring_spec(text: str):
    """Parse a ring-spec string into a descriptor tree."""
    if not text or not text.strip():
        raise RingSpecError("empty ring spec")
    parser = _Parser(text)
    spec = parser.parse_spec()
    parser.skip_ws()
    if parser.pos != len(text):
        raise RingSpecError(
            f"trailing characters after spec: {text[parser.pos:]!r}", column=parser.pos + 1
        )
    return spec


def build(spec, ctx: BuildContext | None = None) -> FiniteRing:
    """Construct the ring a descriptor names, caching by canonical spelling."""
    if ctx is None:
        ctx = BuildContext()
    key = spec.canonical()
    ring = ctx.cache.get(key)
    if ring is None:
        try:
            ring = spec.construct(ctx)
        except IndexError as exc:
            # element arguments (corner idempotent, ideal generators,
            # subring parameters) validated against the built component
            raise ConstructionError(f"{key}: {exc}") from exc
        ctx.cache[key] = ring
    return ring


def build_ring(text: str, ctx: BuildContext | None = None) -> FiniteRing:
    """Parse and construct in one step."""
    return build(parse_ring_spec(text), ctx)
