"""
Permutations of the labels {1, ..., n} under the Hamming metric.

A permutation p is stored in one-line notation as a tuple of length n whose
entry at index i-1 is p(i).  All labels are 1-based in every external format;
most functions accept any integer sequence and return plain tuples.

Composition convention: ``compose(p, g)`` applies p first, then g, so the
result maps j to g(p(j)).  Both conventions are common in the literature;
every function in this package uses this one.

Two distinct permutations always differ in at least two positions, so the
Hamming distance between permutations is never exactly 1.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Cycle = tuple[int, ...]
CycleType = tuple[int, ...]


class PermutationError(ValueError):
    """Raised for sequences that are not permutations or do not match in size."""


def validate(mapping: Sequence[int]) -> Perm:
    """
    Check that ``mapping`` is a bijection on {1..n} and return it as a tuple.

    Raises PermutationError naming a duplicated or missing label otherwise.

    >>> validate([2, 1, 3])
    (2, 1, 3)
    """
    word = tuple(mapping)
    n = len(word)
    seen = [False] * (n + 1)
    for value in word:
        if not isinstance(value, int) or isinstance(value, bool):
            raise PermutationError(f"label {value!r} is not an integer")
        if not 1 <= value <= n:
            raise PermutationError(f"label {value} outside 1..{n}")
        if seen[value]:
            missing = next(i for i in range(1, n + 1) if word.count(i) == 0)
            raise PermutationError(
                f"not a permutation: label {value} appears twice, label {missing} is missing"
            )
        seen[value] = True
    return word


def identity(n: int) -> Perm:
    """The identity permutation on {1..n}."""
    if n < 1:
        raise PermutationError(f"size must be >= 1, got {n}")
    return tuple(range(1, n + 1))


def is_identity(p: Sequence[int]) -> bool:
    return all(p[i] == i + 1 for i in range(len(p)))


def inverse(p: Sequence[int]) -> Perm:
    """
    The inverse permutation.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(p)
    for i, value in enumerate(p):
        inv[value - 1] = i + 1
    return tuple(inv)


def compose(p: Sequence[int], g: Sequence[int]) -> Perm:
    """
    Compose left-to-right: the result maps j to g(p(j)).

    >>> compose((2, 1, 3, 4), (1, 2, 4, 3))
    (2, 1, 4, 3)
    """
    if len(p) != len(g):
        raise PermutationError(f"size mismatch: {len(p)} vs {len(g)}")
    return tuple(g[value - 1] for value in p)


def hamming_distance(p: Sequence[int], q: Sequence[int]) -> int:
    """
    Number of positions where p and q differ.  Never 1 for valid permutations.

    >>> hamming_distance((1, 2, 3, 4), (2, 1, 4, 3))
    4
    """
    if len(p) != len(q):
        raise PermutationError(f"size mismatch: {len(p)} vs {len(q)}")
    return sum(1 for a, b in zip(p, q) if a != b)


def hamming_weight(p: Sequence[int]) -> int:
    """Distance from the identity, i.e. the number of non-fixed labels."""
    return sum(1 for i, value in enumerate(p) if value != i + 1)


def cycles(p: Sequence[int]) -> tuple[Cycle, ...]:
    """
    Canonical disjoint-cycle decomposition, fixed points omitted.

    Each cycle starts at its minimum label and cycles are sorted by first
    label, so equal permutations always decompose identically.

    >>> cycles((2, 1, 4, 5, 3))
    ((1, 2), (3, 4, 5))
    """
    n = len(p)
    seen = [False] * (n + 1)
    out: list[Cycle] = []
    for start in range(1, n + 1):
        if seen[start] or p[start - 1] == start:
            continue
        cyc = []
        label = start
        while not seen[label]:
            seen[label] = True
            cyc.append(label)
            label = p[label - 1]
        out.append(tuple(cyc))
    return tuple(out)


def from_cycles(cyclist: Iterable[Sequence[int]], n: int) -> Perm:
    """
    Build a permutation on {1..n} from disjoint cycles of length >= 2.

    Inverse of :func:`cycles` on its canonical output.
    """
    mapping = list(range(1, n + 1))
    used: set[int] = set()
    for cyc in cyclist:
        if len(cyc) < 2:
            raise PermutationError(f"cycle {tuple(cyc)} has length < 2")
        for label in cyc:
            if not 1 <= label <= n:
                raise PermutationError(f"label {label} outside 1..{n}")
            if label in used:
                raise PermutationError(f"cycles are not disjoint: label {label} repeats")
            used.add(label)
        for i, label in enumerate(cyc):
            mapping[label - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(mapping)


def cycle_type(p: Sequence[int]) -> CycleType:
    """
    Multiset of nontrivial cycle lengths, as a tuple sorted in decreasing
    order.  The identity has the empty type ().

    >>> cycle_type(from_cycles([(1, 2), (3, 4, 5), (6, 7, 8)], 8))
    (3, 3, 2)
    """
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def type_weight(ctype: Sequence[int]) -> int:
    """Hamming weight of any permutation with this cycle type."""
    return sum(ctype)


def format_cycle_type(ctype: Sequence[int]) -> str:
    """
    Exponent notation for a cycle type, lengths ascending: (3, 3, 2) ->
    "[2^1 3^2]".  The identity's empty type renders as "[]".
    """
    counts = Counter(ctype)
    parts = [f"{length}^{counts[length]}" for length in sorted(counts)]
    return "[" + " ".join(parts) + "]"


def support(p: Sequence[int]) -> frozenset[int]:
    """The set of labels moved by p."""
    return frozenset(i + 1 for i, value in enumerate(p) if value != i + 1)


def contacts(p: Sequence[int]) -> frozenset[tuple[int, int]]:
    """
    The set of ordered pairs (i, p(i)) over moved labels i.  Its size equals
    the Hamming weight of p.
    """
    return frozenset((i + 1, value) for i, value in enumerate(p) if value != i + 1)


def distance_via_contacts(p: Sequence[int], q: Sequence[int]) -> int:
    """
    |support(p) u support(q)| - |contacts(p) n contacts(q)|.

    Always equals :func:`hamming_distance`; kept as an independent route so
    the identity can be cross-checked.
    """
    if len(p) != len(q):
        raise PermutationError(f"size mismatch: {len(p)} vs {len(q)}")
    return len(support(p) | support(q)) - len(contacts(p) & contacts(q))


def relabel(f: Sequence[int], p: Sequence[int]) -> Perm:
    """
    Rename the labels of p through f: each cycle (c1 c2 ...) of p becomes
    (f(c1) f(c2) ...).  The cycle type is preserved.

    >>> relabel((3, 2, 1), from_cycles([(1, 2)], 3))
    (1, 3, 2)
    """
    if len(f) != len(p):
        raise PermutationError(f"size mismatch: {len(f)} vs {len(p)}")
    out = [0] * len(p)
    for i in range(len(p)):
        out[f[i] - 1] = f[p[i] - 1]
    return tuple(out)


_CYCLE_TOKEN = re.compile(r"\(([^()]*)\)|(\S)")


def parse(text: str, n: int | None = None) -> Perm:
    """
    Parse a permutation from one-line notation ("2 1 4 5 3") or cycle
    notation ("(1 2)(3 4 5)").  Cycle notation needs the ambient size ``n``
    since fixed points are not written.
    """
    stripped = text.strip()
    if stripped.startswith("("):
        return _parse_cycles(stripped, n)
    return _parse_one_line(stripped, n)


def _parse_one_line(text: str, n: int | None) -> Perm:
    tokens = text.split()
    if not tokens:
        raise PermutationError("empty permutation")
    values = []
    for pos, token in enumerate(tokens, start=1):
        try:
            values.append(int(token))
        except ValueError:
            raise PermutationError(
                f"position {pos}: {token!r} is not an integer label"
            ) from None
    if n is not None and n != len(values):
        raise PermutationError(f"expected {n} labels, got {len(values)}")
    return validate(values)


def _parse_cycles(text: str, n: int | None) -> Perm:
    if n is None:
        raise PermutationError("cycle notation needs the ambient size n")
    cyclist = []
    pos = 0
    for match in _CYCLE_TOKEN.finditer(text):
        if match.group(2) is not None:
            raise PermutationError(
                f"position {match.start() + 1}: unexpected {match.group(2)!r} outside a cycle"
            )
        body = match.group(1).split()
        pos += 1
        try:
            labels = [int(token) for token in body]
        except ValueError:
            raise PermutationError(f"cycle {pos}: non-integer label in ({match.group(1)})") from None
        if len(labels) < 2:
            raise PermutationError(f"cycle {pos}: needs at least two labels")
        cyclist.append(labels)
    if not cyclist:
        raise PermutationError("no cycles found")
    return from_cycles(cyclist, n)


def format_one_line(p: Sequence[int]) -> str:
    return " ".join(str(value) for value in p)


def format_cycles(p: Sequence[int]) -> str:
    """Cycle notation; the identity renders as "()"."""
    decomposition = cycles(p)
    if not decomposition:
        return "()"
    return "".join("(" + " ".join(str(v) for v in c) + ")" for c in decomposition)
