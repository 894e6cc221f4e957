"""The divisor-pair tree: nodes (d, m) with d >= 1, m >= 0 and d | m*m + 1.

The tree is rooted at (1, 0) and grows by the child maps

    L(d, m) = (d, m + d)
    R(d, m) = (((m + d)**2 + 1) // d,  m + (m*m + 1) // d)

The reflection  involute(d, m) = ((m*m + 1) // d, m)  swaps the two
subtrees, and R = involute . L . involute.  Every valid pair occurs in
the tree exactly once, so each pair has a well-defined path from the
root, written as a word over {L, R}.

Words map to 1-based heap indices: the empty word is index 1, appending
L doubles the index and appending R doubles it plus one.  Equivalently,
the binary digits of the index after the leading 1 spell the path with
L = 0 and R = 1.  The second component of the pair at index n is s(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (
    ConsistencyError,
    InvalidPairError,
    ResourceLimitError,
    RootHasNoParentError,
)

DEFAULT_MAX_DEPTH = 20


@dataclass(frozen=True, slots=True)
class Pair:
    """Tree node value; the constructor rejects invalid pairs."""

    d: int
    m: int

    def __post_init__(self):
        if self.d < 1 or self.m < 0 or (self.m * self.m + 1) % self.d:
            raise InvalidPairError(f"({self.d}, {self.m}) is not a divisor pair")

    @classmethod
    def unchecked(cls, d: int, m: int) -> "Pair":
        # For interior loops producing provably valid pairs: skips the
        # modular reduction in __post_init__.
        p = object.__new__(cls)
        object.__setattr__(p, "d", d)
        object.__setattr__(p, "m", m)
        return p

    def is_valid(self) -> bool:
        return self.d >= 1 and self.m >= 0 and (self.m * self.m + 1) % self.d == 0


ROOT = Pair(1, 0)


def left_child(p: Pair) -> Pair:
    """L(d, m) = (d, m + d)."""
    return Pair(p.d, p.m + p.d)


def right_child(p: Pair) -> Pair:
    """R(d, m) = (((m + d)**2 + 1) // d, m + (m*m + 1) // d)."""
    d, m = p.d, p.m
    t = m + d
    return Pair((t * t + 1) // d, m + (m * m + 1) // d)


def involute(p: Pair) -> Pair:
    """Reflect across the tree's central axis: (d, m) -> ((m*m + 1) // d, m).

    An involution: applying it twice is the identity.
    """
    return Pair((p.m * p.m + 1) // p.d, p.m)


def parent(p: Pair) -> tuple[str, Pair]:
    """Invert one child step; returns ('L' or 'R', parent pair).

    The inverse maps are L'(d, m) = (d, m - d) and
    R'(d, m) = (((m - d)**2 + 1) // d, m - (m*m + 1) // d).  For any valid
    non-root pair exactly one of them has a nonnegative second component;
    that uniqueness is what makes root paths unique, so it is asserted at
    runtime rather than trusted.
    """
    d, m = p.d, p.m
    if m == 0 and d == 1:
        raise RootHasNoParentError("(1, 0) is the root")
    found: list[tuple[str, int, int]] = []
    if m - d >= 0:
        found.append(("L", d, m - d))
    q = (m * m + 1) // d
    if m - q >= 0:
        t = m - d
        found.append(("R", (t * t + 1) // d, m - q))
    if len(found) != 1:
        raise ConsistencyError(
            f"pair ({d}, {m}) has {len(found)} candidate parents, expected exactly 1"
        )
    step, pd, pm = found[0]
    try:
        return step, Pair(pd, pm)
    except InvalidPairError as exc:
        raise ConsistencyError(f"{step}-inverse of ({d}, {m}) is not a valid pair") from exc


def path_from_root(p: Pair) -> str:
    """The unique L/R word leading from (1, 0) to p ('' for the root)."""
    steps = []
    while not (p.d == 1 and p.m == 0):
        step, p = parent(p)
        steps.append(step)
    return "".join(reversed(steps))


def word_to_index(word: str) -> int:
    """Path word to 1-based heap index: '' -> 1, 'L' -> 2, 'R' -> 3, ..."""
    n = 1
    for step in word:
        if step == "L":
            n = 2 * n
        elif step == "R":
            n = 2 * n + 1
        else:
            raise ValueError(f"path step must be 'L' or 'R', got {step!r}")
    return n


def index_to_word(n: int) -> str:
    """Inverse of word_to_index."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return "".join("R" if b == "1" else "L" for b in bin(n)[3:])


def index_of_pair(p: Pair) -> int:
    """Heap index of p: the binary encoding of its root path."""
    return word_to_index(path_from_root(p))


def pair_at_index(n: int) -> Pair:
    """Pair at heap index n: walk the bits of n after the leading 1."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    d, m = 1, 0
    for b in bin(n)[3:]:
        if b == "0":
            m = m + d
        else:
            t = m + d
            d, m = (t * t + 1) // d, m + (m * m + 1) // d
    return Pair.unchecked(d, m)


def apply_path(word: str, start: Pair = ROOT) -> Pair:
    """Apply a word of L/R child steps starting from `start`."""
    p = start
    for step in word:
        if step == "L":
            p = left_child(p)
        elif step == "R":
            p = right_child(p)
        else:
            raise ValueError(f"path step must be 'L' or 'R', got {step!r}")
    return p


def iter_pair_rows() -> Iterator[list[Pair]]:
    """Yield whole tree rows without end; row k holds 2**k pairs, left to right."""
    row = [ROOT]
    while True:
        yield row
        nxt: list[Pair] = []
        append = nxt.append
        for p in row:
            d, m = p.d, p.m
            append(Pair.unchecked(d, m + d))
            t = m + d
            append(Pair.unchecked((t * t + 1) // d, m + (m * m + 1) // d))
        row = nxt


def pair_rows(depth: int, *, max_depth: int = DEFAULT_MAX_DEPTH) -> list[list[Pair]]:
    """Rows 0..depth of the tree."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if depth > max_depth:
        raise ResourceLimitError(f"depth {depth} exceeds the cap {max_depth}")
    out = []
    for k, row in enumerate(iter_pair_rows()):
        out.append(row)
        if k == depth:
            return out
    raise AssertionError("unreachable")


def tree_as_dict(
    depth: int, *, values_only: bool = False, max_depth: int = DEFAULT_MAX_DEPTH
) -> dict:
    """Nested {d, m, index, children} mapping of rows 0..depth.

    With values_only=True nodes carry {value, index, children} instead.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if depth > max_depth:
        raise ResourceLimitError(f"depth {depth} exceeds the cap {max_depth}")

    def node(p: Pair, index: int, level: int) -> dict:
        out: dict = (
            {"value": p.m, "index": index}
            if values_only
            else {"d": p.d, "m": p.m, "index": index}
        )
        if level < depth:
            out["children"] = [
                node(left_child(p), 2 * index, level + 1),
                node(right_child(p), 2 * index + 1, level + 1),
            ]
        else:
            out["children"] = []
        return out

    return node(ROOT, 1, 0)


def tree_as_dot(
    depth: int, *, values_only: bool = False, max_depth: int = DEFAULT_MAX_DEPTH
) -> str:
    """DOT digraph of rows 0..depth, nodes labeled "(d,m)" (or just m)."""
    rows = pair_rows(depth, max_depth=max_depth)
    lines = ["digraph pairtree {", "  node [shape=box];"]
    for k, row in enumerate(rows):
        base = 1 << k
        for j, p in enumerate(row):
            label = str(p.m) if values_only else f"({p.d},{p.m})"
            lines.append(f'  n{base + j} [label="{label}"];')
    for k in range(depth):
        for idx in range(1 << k, 1 << (k + 1)):
            lines.append(f"  n{idx} -> n{2 * idx};")
            lines.append(f"  n{idx} -> n{2 * idx + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
