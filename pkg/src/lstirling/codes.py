"""Insertion codes for the doubled-multiset partitions, and the bijection.

A code of length n is a sequence of symbols, one per inserted value:

    X       start a fresh pair box {m, m'}
    A(i,j)  plain copy into nonzero box i, barred copy into box j (i != j)
    B(s)    plain copy into nonzero box s, barred copy into the zero box
    Bb(s)   barred copy into nonzero box s, plain copy into the zero box

The first symbol must be X, and every box index used at step m must not
exceed the number of X symbols seen before step m.  The map phi builds a
partition by replaying a code; phi_inverse recovers the code by peeling the
largest value.  Codes of length n with k X symbols are counted by ls(n,k):
a non-X step taken with t pair boxes available has t(t-1) + 2t = t^2 + t
choices, which is where the factor k(k+1) of the triangle recurrence lives.

Symbols are plain tuples: ("X",), ("A", i, j), ("B", s), ("Bb", s).
"""
from __future__ import annotations

import re

from .partitions import ENUM_LIMIT, LSPartition, validate
from .triangles import CheckResult

X = ("X",)


def A(i: int, j: int) -> tuple:
    if i == j:
        raise ValueError("A(i,j) requires distinct box indices")
    if i < 1 or j < 1:
        raise ValueError("A(i,j) box indices start at 1")
    return ("A", i, j)


def B(s: int) -> tuple:
    if s < 1:
        raise ValueError("B(s) box index starts at 1")
    return ("B", s)


def Bb(s: int) -> tuple:
    if s < 1:
        raise ValueError("Bb(s) box index starts at 1")
    return ("Bb", s)


def n_x(code) -> int:
    """Number of X symbols, i.e. the number of pair boxes the code opens."""
    return sum(1 for sym in code if sym == X)


def validate_code(code) -> CheckResult:
    """Check the structural rules; report the first offending position (1-based)."""
    if not code:
        return CheckResult(False, "position 1: empty code")
    t = 0
    for pos, sym in enumerate(code, start=1):
        if not isinstance(sym, tuple) or not sym or sym[0] not in ("X", "A", "B", "Bb"):
            return CheckResult(False, f"position {pos}: unknown symbol {sym!r}")
        kind = sym[0]
        if kind == "X":
            if len(sym) != 1:
                return CheckResult(False, f"position {pos}: malformed X")
            t += 1
            continue
        if pos == 1:
            return CheckResult(False, "position 1: code must start with X")
        idxs = sym[1:]
        if (kind == "A" and len(idxs) != 2) or (kind in ("B", "Bb") and len(idxs) != 1):
            return CheckResult(False, f"position {pos}: malformed {kind} symbol")
        if kind == "A" and idxs[0] == idxs[1]:
            return CheckResult(False, f"position {pos}: A indices must differ")
        for idx in idxs:
            if not isinstance(idx, int) or not 1 <= idx <= t:
                return CheckResult(False, f"position {pos}: box index {idx} exceeds the {t} boxes opened")
    return CheckResult(True)


def phi(code) -> LSPartition:
    """Replay a code into the partition it encodes."""
    v = validate_code(code)
    if not v:
        raise ValueError(f"phi: invalid code ({v.detail})")
    boxes: list = []
    zero: set = set()
    for m, sym in enumerate(code, start=1):
        plain, barred = (m, False), (m, True)
        kind = sym[0]
        if kind == "X":
            boxes.append({plain, barred})
        elif kind == "A":
            boxes[sym[1] - 1].add(plain)
            boxes[sym[2] - 1].add(barred)
        elif kind == "B":
            boxes[sym[1] - 1].add(plain)
            zero.add(barred)
        else:
            boxes[sym[1] - 1].add(barred)
            zero.add(plain)
    return LSPartition(len(code), tuple(frozenset(b) for b in boxes), frozenset(zero))


def phi_inverse(p: LSPartition):
    """Recover the code of a valid partition by peeling the largest value."""
    v = validate(p)
    if not v:
        raise ValueError(f"phi_inverse: invalid partition ({v.detail})")
    boxes = [set(b) for b in p.boxes]
    zero = set(p.zero_box)
    out = []
    for m in range(p.n, 0, -1):
        plain, barred = (m, False), (m, True)
        ip = next((i for i, b in enumerate(boxes) if plain in b), None)
        ib = next((i for i, b in enumerate(boxes) if barred in b), None)
        if ip is not None and ib is not None:
            if ip == ib:
                # both copies share a box, so m is its minimum and the box
                # is exactly the pair {m, m'}
                out.append(X)
                boxes.pop(ip)
            else:
                out.append(A(ip + 1, ib + 1))
                boxes[ip].remove(plain)
                boxes[ib].remove(barred)
        elif ip is not None:
            out.append(B(ip + 1))
            boxes[ip].remove(plain)
            zero.remove(barred)
        else:
            out.append(Bb(ib + 1))
            boxes[ib].remove(barred)
            zero.remove(plain)
    return tuple(reversed(out))


def _legal_non_x(t: int) -> list:
    out = [A(i, j) for i in range(1, t + 1) for j in range(1, t + 1) if i != j]
    out.extend(B(s) for s in range(1, t + 1))
    out.extend(Bb(s) for s in range(1, t + 1))
    return out


def enumerate_codes(n: int):
    """Yield every valid code of length n; guarded at n <= ENUM_LIMIT."""
    if not 1 <= n <= ENUM_LIMIT:
        raise ValueError(f"enumerate_codes: n must be in 1..{ENUM_LIMIT}, got {n}")

    def extend(code, t):
        if len(code) == n:
            yield code
            return
        yield from extend(code + (X,), t + 1)
        for sym in _legal_non_x(t):
            yield from extend(code + (sym,), t)

    yield from extend((X,), 1)


def count_codes(n: int, k: int, exhaustive: bool = False) -> int:
    """Number of codes of length n with exactly k X symbols; equals ls(n,k).

    The default mode multiplies per-step choice counts: a non-X position
    reached with t X's seen contributes t^2 + t choices.  Exhaustive mode
    enumerates codes outright and is guarded at n <= ENUM_LIMIT.
    """
    if n < 1:
        raise ValueError("count_codes: n must be at least 1")
    if exhaustive:
        return sum(1 for code in enumerate_codes(n) if n_x(code) == k)
    if k < 1 or k > n:
        return 0
    ways = [0] * (k + 1)
    ways[1] = 1
    for _ in range(n - 1):
        nxt = [0] * (k + 1)
        for t in range(1, k + 1):
            w = ways[t]
            if not w:
                continue
            if t + 1 <= k:
                nxt[t + 1] += w
            nxt[t] += w * (t * t + t)
        ways = nxt
    return ways[k]


def render_code(code) -> str:
    """Comma-separated token form: 'X,X,A(2,1),B(2),Bb(1)'."""
    parts = []
    for sym in code:
        if sym == X:
            parts.append("X")
        elif sym[0] == "A":
            parts.append(f"A({sym[1]},{sym[2]})")
        else:
            parts.append(f"{sym[0]}({sym[1]})")
    return ",".join(parts)


_TOKEN = re.compile(r"X|A\((\d+),(\d+)\)|(B|Bb)\((\d+)\)")


def parse_code(text: str):
    """Inverse of render_code."""
    out = []
    s = text.strip()
    if not s:
        raise ValueError("parse_code: empty code text")
    pos = 0
    while pos < len(s):
        if s[pos] in ", ":
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"bad code token at position {pos}: {s[pos:]!r}")
        if m.group(0) == "X":
            out.append(X)
        elif m.group(1):
            out.append(A(int(m.group(1)), int(m.group(2))))
        elif m.group(3) == "B":
            out.append(B(int(m.group(4))))
        else:
            out.append(Bb(int(m.group(4))))
        pos = m.end()
    return tuple(out)
