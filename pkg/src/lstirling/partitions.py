"""Set partitions of the doubled multiset {1, 1', 2, 2', ..., n, n'}.

Each value v occurs twice, once plain and once barred (written v').  Barred
and plain copies of the same value are equal in the ordering; only the value
matters.  A partition consists of nonzero boxes plus one distinguished zero
box, subject to:

    r1  the zero box may be empty and never holds both copies of a value;
    r2  every nonzero box is nonempty and holds both copies of its minimum
        value, and of no other value.

Standard form lists nonzero boxes in increasing order of their minima, zero
box last.  Text rendering uses curly braces for nonzero boxes and angle
brackets for the zero box: "{1,1',3',5'}{2,2',3,4}<4',5>".

Elements are (value, barred) tuples.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .algebra import Poly
from .triangles import CheckResult

ENUM_LIMIT = 7

Element = tuple  # (value: int, barred: bool)


def render_element(e: Element) -> str:
    v, barred = e
    return f"{v}'" if barred else str(v)


def parse_element(tok: str) -> Element:
    m = re.fullmatch(r"(\d+)(')?", tok.strip())
    if not m or int(m.group(1)) < 1:
        raise ValueError(f"bad element token {tok!r}")
    return (int(m.group(1)), m.group(2) == "'")


def _render_box(box) -> str:
    return ",".join(render_element(e) for e in sorted(box))


@dataclass(frozen=True)
class LSPartition:
    """A partition of {1,1',...,n,n'} into nonzero boxes plus a zero box."""

    n: int
    boxes: tuple  # tuple of frozensets of Elements
    zero_box: frozenset

    def render(self) -> str:
        inner = "".join("{" + _render_box(b) + "}" for b in self.boxes)
        return inner + "<" + _render_box(self.zero_box) + ">"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "boxes": [[render_element(e) for e in sorted(b)] for b in self.boxes],
            "zero_box": [render_element(e) for e in sorted(self.zero_box)],
        }

    def __repr__(self):
        return f"LSPartition('{self.render()}')"


def from_json_dict(doc: dict) -> LSPartition:
    boxes = tuple(frozenset(parse_element(t) for t in b) for b in doc["boxes"])
    zero = frozenset(parse_element(t) for t in doc["zero_box"])
    return LSPartition(doc["n"], boxes, zero)


def parse(text: str) -> LSPartition:
    """Parse the canonical rendering; inverse of LSPartition.render."""
    m = re.fullmatch(r"((?:\{[^{}<>]*\})*)<([^{}<>]*)>", text.strip())
    if not m:
        raise ValueError(f"bad partition text {text!r}")
    boxes = []
    for body in re.findall(r"\{([^{}]*)\}", m.group(1)):
        if not body.strip():
            raise ValueError("empty nonzero box")
        boxes.append(frozenset(parse_element(t) for t in body.split(",")))
    zero_body = m.group(2).strip()
    zero = frozenset(parse_element(t) for t in zero_body.split(",")) if zero_body else frozenset()
    values = [e[0] for b in boxes for e in b] + [e[0] for e in zero]
    return LSPartition(max(values, default=0), tuple(boxes), zero)


def validate(p: LSPartition) -> CheckResult:
    """Check coverage, r1, r2, and standard form; report the first violation."""
    seen = sorted(e for b in p.boxes for e in b) + sorted(p.zero_box)
    expected = sorted((v, barred) for v in range(1, p.n + 1) for barred in (False, True))
    if sorted(seen) != expected:
        return CheckResult(False, "coverage: elements do not cover {1,1',...,n,n'} exactly once")
    for v in range(1, p.n + 1):
        if (v, False) in p.zero_box and (v, True) in p.zero_box:
            return CheckResult(False, f"r1: zero box holds both copies of {v}")
    for idx, box in enumerate(p.boxes, start=1):
        if not box:
            return CheckResult(False, f"r2: box {idx} is empty")
        mn = min(e[0] for e in box)
        if (mn, False) not in box or (mn, True) not in box:
            return CheckResult(False, f"r2: box {idx} is missing a copy of its minimum {mn}")
        for v in {e[0] for e in box} - {mn}:
            if (v, False) in box and (v, True) in box:
                return CheckResult(False, f"r2: box {idx} holds both copies of non-minimum {v}")
    minima = [min(e[0] for e in b) for b in p.boxes]
    if minima != sorted(minima):
        return CheckResult(False, "standard-form: boxes are not sorted by minima")
    return CheckResult(True)


def _with_added(boxes: tuple, i: int, e: Element) -> tuple:
    return boxes[:i] + (boxes[i] | {e},) + boxes[i + 1 :]


def enumerate_partitions(n: int):
    """Yield every valid partition of {1,1',...,n,n'} exactly once.

    Grows partitions by inserting the pair m, m' for m = 2..n into each
    partition of the first m-1 values: as a fresh pair box, split across two
    distinct nonzero boxes, or split between a nonzero box and the zero box
    (either orientation).  Standard form holds by construction.  Guarded at
    n <= ENUM_LIMIT.
    """
    if not 1 <= n <= ENUM_LIMIT:
        raise ValueError(f"enumerate_partitions: n must be in 1..{ENUM_LIMIT}, got {n}")

    def grow(boxes, zero, m):
        if m > n:
            yield LSPartition(n, boxes, zero)
            return
        plain, barred = (m, False), (m, True)
        yield from grow(boxes + (frozenset((plain, barred)),), zero, m + 1)
        k = len(boxes)
        for i in range(k):
            for j in range(k):
                if i != j:
                    yield from grow(_with_added(_with_added(boxes, i, plain), j, barred), zero, m + 1)
        for s in range(k):
            yield from grow(_with_added(boxes, s, plain), zero | {barred}, m + 1)
            yield from grow(_with_added(boxes, s, barred), zero | {plain}, m + 1)

    start = (frozenset(((1, False), (1, True))),)
    yield from grow(start, frozenset(), 2)


def count_by_blocks(n: int) -> dict:
    """Histogram {k: number of partitions with k nonzero boxes}."""
    out: dict = {}
    for p in enumerate_partitions(n):
        out[len(p.boxes)] = out.get(len(p.boxes), 0) + 1
    return out


@lru_cache(maxsize=None)
def _zstat_rows(n: int) -> dict:
    rows: dict = {}
    for p in enumerate_partitions(n):
        k = len(p.boxes)
        i = sum(1 for e in p.zero_box if e[1])
        row = rows.setdefault(k, [])
        if len(row) <= i:
            row.extend(0 for _ in range(i + 1 - len(row)))
        row[i] += 1
    return rows


def js_brute(n: int, k: int) -> Poly:
    """Zero-box statistic generating polynomial, by direct enumeration.

    Coefficient of z^i counts partitions with k nonzero boxes and exactly i
    barred elements in the zero box; agrees with js(n,k).
    """
    if not 1 <= n <= ENUM_LIMIT:
        raise ValueError(f"js_brute: n must be in 1..{ENUM_LIMIT}, got {n}")
    return Poly(_zstat_rows(n).get(k, ()))
