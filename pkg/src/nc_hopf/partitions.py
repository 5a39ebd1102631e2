"""Set partitions and non-crossing partitions: enumeration, lattice calculus,
block orders, standardization, and admissible splittings.

Canonical form everywhere: each block sorted ascending, blocks ordered by
their minimum element.  Carriers are finite sets of positive integers; the
carrier of a partition is always the union of its blocks.

Text encoding (the golden-file format): blocks concatenated, each ``{a,b,c}``
with ascending members, e.g. ``{1,4}{2,3}``.  JSON: ``{"blocks": [[1,4],[2,3]]}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product

from . import config
from .errors import (
    CarrierMismatchError,
    OrderError,
    ParseError,
    SizeLimitError,
)

Block = tuple[int, ...]


@dataclass(frozen=True)
class SetPartition:
    """A partition of a finite set of positive integers, in canonical form."""

    blocks: tuple[Block, ...]

    def __post_init__(self):
        seen: set[int] = set()
        prev_min = 0
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if list(block) != sorted(block):
                raise ValueError(f"block not sorted: {block}")
            if block[0] <= prev_min:
                raise ValueError("blocks not ordered by minimum element")
            if any(x < 1 for x in block):
                raise ValueError("carrier elements must be positive")
            if seen & set(block):
                raise ValueError("blocks not disjoint")
            seen |= set(block)
            prev_min = block[0]

    @classmethod
    def of(cls, blocks) -> "SetPartition":
        """Build from any iterable of iterables, canonicalizing first."""
        cleaned = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in cleaned):
            raise ValueError("empty block")
        return cls(tuple(sorted(cleaned, key=lambda b: b[0])))

    @property
    def carrier(self) -> tuple[int, ...]:
        return tuple(sorted(x for block in self.blocks for x in block))

    @property
    def size(self) -> int:
        """Number of carrier elements."""
        return sum(len(b) for b in self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self, x: int) -> int:
        """Index of the block containing x."""
        for i, block in enumerate(self.blocks):
            if x in block:
                return i
        raise KeyError(x)

    def restrict(self, subset) -> "SetPartition":
        """Intersect every block with ``subset``, dropping empties."""
        s = set(subset)
        kept = [tuple(x for x in b if x in s) for b in self.blocks]
        return type(self).of([b for b in kept if b])

    def text(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}

    def __str__(self):
        return self.text()


@dataclass(frozen=True)
class NonCrossingPartition(SetPartition):
    """A set partition with no crossing quadruple p1 < q1 < p2 < q2,
    p1 ~ p2, q1 ~ q2, p1 !~ q1."""

    def __post_init__(self):
        super().__post_init__()
        if not _blocks_noncrossing(self.blocks):
            raise ValueError(f"partition is crossing: {self.blocks}")


class BlockRelation(Enum):
    """Mutual position of two distinct blocks of a non-crossing partition."""

    DISJOINT_BEFORE = "disjoint_before"   # L_i entirely left of L_j
    DISJOINT_AFTER = "disjoint_after"     # L_i entirely right of L_j
    NESTED_INSIDE = "nested_inside"       # L_i <_L L_j
    NESTED_OUTSIDE = "nested_outside"     # L_j <_L L_i

    @property
    def inverse(self) -> "BlockRelation":
        return _RELATION_INVERSE[self]


_RELATION_INVERSE = {
    BlockRelation.DISJOINT_BEFORE: BlockRelation.DISJOINT_AFTER,
    BlockRelation.DISJOINT_AFTER: BlockRelation.DISJOINT_BEFORE,
    BlockRelation.NESTED_INSIDE: BlockRelation.NESTED_OUTSIDE,
    BlockRelation.NESTED_OUTSIDE: BlockRelation.NESTED_INSIDE,
}


@dataclass(frozen=True)
class AdmissibleSplit:
    """A two-part block partition L = Q ⊔ T with no Q-block nested inside a
    T-block, packaged with T's restriction to each connected component of the
    complement of Q's carrier."""

    q_part: NonCrossingPartition
    components: tuple[NonCrossingPartition, ...]


# ---------------------------------------------------------------------------
# crossing test and block order


def _pair_crosses(a: Block, b: Block) -> bool:
    """True iff blocks a, b admit a quadruple x1 < y1 < x2 < y2 alternating
    between them.  Scan the merged sequence: crossing iff the run-compressed
    label sequence has length >= 4."""
    merged = sorted([(x, 0) for x in a] + [(y, 1) for y in b])
    runs = 0
    last = None
    for _, label in merged:
        if label != last:
            runs += 1
            last = label
    return runs >= 4


def _blocks_noncrossing(blocks: tuple[Block, ...]) -> bool:
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if _pair_crosses(blocks[i], blocks[j]):
                return False
    return True


def is_noncrossing(p: SetPartition) -> bool:
    """Whether a canonical set partition has no crossing pair of blocks."""
    return _blocks_noncrossing(p.blocks)


def as_noncrossing(p: SetPartition) -> NonCrossingPartition:
    if isinstance(p, NonCrossingPartition):
        return p
    return NonCrossingPartition(p.blocks)


def _nested_inside(inner: Block, outer: Block) -> bool:
    # inner <_L outer: every element strictly between min and max of outer.
    return outer[0] < inner[0] and inner[-1] < outer[-1]


def block_relation(p: NonCrossingPartition, i: int, j: int) -> BlockRelation:
    """Relation of block i to block j (0-based canonical indices)."""
    k = len(p.blocks)
    if i == j:
        raise ValueError("blocks must be distinct")
    if not (0 <= i < k and 0 <= j < k):
        raise IndexError(f"block index out of range: {i}, {j}")
    a, b = p.blocks[i], p.blocks[j]
    if a[-1] < b[0]:
        return BlockRelation.DISJOINT_BEFORE
    if b[-1] < a[0]:
        return BlockRelation.DISJOINT_AFTER
    if _nested_inside(a, b):
        return BlockRelation.NESTED_INSIDE
    if _nested_inside(b, a):
        return BlockRelation.NESTED_OUTSIDE
    raise ValueError(f"blocks {a} and {b} are neither disjoint nor nested")


# ---------------------------------------------------------------------------
# enumeration


def _rgs_partitions(n: int):
    """All set partitions of [n] via restricted growth strings."""
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, maxval: int):
        if i == n:
            nblocks = maxval + 1
            blocks = [[] for _ in range(nblocks)]
            for pos, label in enumerate(rgs):
                blocks[label].append(pos + 1)
            yield blocks
            return
        for label in range(maxval + 2):
            rgs[i] = label
            yield from rec(i + 1, max(maxval, label))

    yield from rec(1, 0)


@lru_cache(maxsize=None)
def _all_set_partitions(n: int) -> tuple[SetPartition, ...]:
    parts = [SetPartition.of(blocks) for blocks in _rgs_partitions(n)]
    parts.sort(key=lambda p: p.text())
    return tuple(parts)


def enumerate_set_partitions(n: int) -> list[SetPartition]:
    """All partitions of [n], canonical form, sorted by text encoding."""
    cap = config.set_cap()
    if not (1 <= n <= cap):
        raise SizeLimitError(f"n={n} outside allowed range 1..{cap}")
    return list(_all_set_partitions(n))


def _nc_blocklists(elements: tuple[int, ...]):
    """All non-crossing partitions of the sorted tuple ``elements``.

    The block containing the first element is chosen as a subset of the
    remaining elements; everything else must live in the gaps between its
    consecutive members (joining across a gap boundary would cross it).
    """
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    m = len(rest)
    for mask in range(1 << m):
        chosen = [rest[i] for i in range(m) if mask >> i & 1]
        block = (first, *chosen)
        gaps: list[list[int]] = [[] for _ in range(len(chosen) + 1)]
        gi = 0
        for x in rest:
            if gi < len(chosen) and x == chosen[gi]:
                gi += 1
                continue
            gaps[gi].append(x)
        for combo in product(*(list(_nc_blocklists(tuple(g))) for g in gaps)):
            blocks = [list(block)]
            for sub in combo:
                blocks.extend(sub)
            yield blocks


@lru_cache(maxsize=None)
def _all_nc_partitions(n: int) -> tuple[NonCrossingPartition, ...]:
    elems = tuple(range(1, n + 1))
    parts = [NonCrossingPartition.of(blocks) for blocks in _nc_blocklists(elems)]
    parts.sort(key=lambda p: p.text())
    return tuple(parts)


def enumerate_nc_partitions(n: int) -> list[NonCrossingPartition]:
    """All non-crossing partitions of [n], canonical form, sorted by text
    encoding."""
    cap = config.nc_cap()
    if not (1 <= n <= cap):
        raise SizeLimitError(f"n={n} outside allowed range 1..{cap}")
    return list(_all_nc_partitions(n))


def nc_partitions_of(elements) -> list[NonCrossingPartition]:
    """Non-crossing partitions of an arbitrary finite integer set."""
    elems = tuple(sorted(elements))
    cap = config.nc_cap()
    if len(elems) > cap:
        raise SizeLimitError(f"carrier size {len(elems)} exceeds cap {cap}")
    parts = [NonCrossingPartition.of(blocks) for blocks in _nc_blocklists(elems)]
    parts.sort(key=lambda p: p.text())
    return parts


def full_partition(elements) -> NonCrossingPartition:
    """The one-block partition 1̂ of the given carrier."""
    return NonCrossingPartition.of([tuple(sorted(elements))])


def singleton_partition(elements) -> NonCrossingPartition:
    """The all-singletons partition 0̂ of the given carrier."""
    return NonCrossingPartition.of([(x,) for x in elements])


# ---------------------------------------------------------------------------
# order, standardization, components


def refines(fine: SetPartition, coarse: SetPartition) -> bool:
    """Whether every block of ``fine`` is contained in a block of ``coarse``."""
    if fine.carrier != coarse.carrier:
        raise CarrierMismatchError(
            f"carriers differ: {fine.carrier} vs {coarse.carrier}")
    owner = {x: i for i, block in enumerate(coarse.blocks) for x in block}
    for block in fine.blocks:
        target = owner[block[0]]
        if any(owner[x] != target for x in block[1:]):
            return False
    return True


def standardize(p: SetPartition) -> SetPartition:
    """Relabel the carrier to [n] by the unique increasing bijection."""
    relabel = {x: i + 1 for i, x in enumerate(p.carrier)}
    blocks = [tuple(relabel[x] for x in b) for b in p.blocks]
    return type(p).of(blocks)


def connected_components(s, u) -> list[tuple[int, ...]]:
    """Connected components of U - S relative to U: maximal runs of elements
    of U - S with no element of S in between, in increasing order."""
    s_set, u_set = set(s), set(u)
    if not s_set <= u_set:
        raise CarrierMismatchError("S must be a subset of U")
    components: list[tuple[int, ...]] = []
    run: list[int] = []
    for x in sorted(u_set):
        if x in s_set:
            if run:
                components.append(tuple(run))
                run = []
        else:
            run.append(x)
    if run:
        components.append(tuple(run))
    return components


# ---------------------------------------------------------------------------
# admissible splits


@lru_cache(maxsize=None)
def admissible_splits(p: NonCrossingPartition) -> tuple[AdmissibleSplit, ...]:
    """Every admissible two-part block partition Q ⊔ T of p (either part may
    be empty), each with T regrouped by connected component of the complement
    of Q's carrier.  Order: by bitmask of the Q-blocks in canonical order."""
    blocks = p.blocks
    k = len(blocks)
    carrier = p.carrier
    splits: list[AdmissibleSplit] = []
    for mask in range(1 << k):
        q_blocks = [blocks[i] for i in range(k) if mask >> i & 1]
        t_blocks = [blocks[i] for i in range(k) if not mask >> i & 1]
        if any(_nested_inside(q, t) for q in q_blocks for t in t_blocks):
            continue
        q_carrier = [x for b in q_blocks for x in b]
        comps = connected_components(q_carrier, carrier)
        comp_parts = []
        for comp in comps:
            comp_set = set(comp)
            inside = [b for b in t_blocks if set(b) <= comp_set]
            comp_parts.append(NonCrossingPartition.of(inside))
        splits.append(AdmissibleSplit(
            q_part=NonCrossingPartition.of(q_blocks),
            components=tuple(comp_parts),
        ))
    return tuple(splits)


# ---------------------------------------------------------------------------
# Möbius calculus


def _interval(lattice: str, lo: SetPartition, hi: SetPartition):
    """All elements of [lo, hi] in the chosen lattice, enumerated as merges:
    within each hi-block, partition the lo-blocks it contains."""
    owner = {x: i for i, block in enumerate(hi.blocks) for x in block}
    groups: list[list[Block]] = [[] for _ in hi.blocks]
    for block in lo.blocks:
        groups[owner[block[0]]].append(block)
    per_group = []
    for group in groups:
        merges = []
        for bp in _rgs_partitions(len(group)):
            merged = [tuple(sorted(x for idx in cell for x in group[idx - 1]))
                      for cell in bp]
            merges.append(merged)
        per_group.append(merges)
    out = []
    for combo in product(*per_group):
        blocks = [b for merged in combo for b in merged]
        if lattice == "nc" and not _blocks_noncrossing(
                tuple(sorted(blocks, key=lambda b: b[0]))):
            continue
        out.append(SetPartition.of(blocks))
    return out


def _check_interval_args(lattice, lo, hi):
    if lattice not in ("set", "nc"):
        raise ValueError(f"unknown lattice selector: {lattice!r}")
    if lo.carrier != hi.carrier:
        raise CarrierMismatchError("interval endpoints on different carriers")
    if lattice == "nc" and not (is_noncrossing(lo) and is_noncrossing(hi)):
        raise ValueError("nc lattice selected but an endpoint is crossing")
    if not refines(lo, hi):
        raise OrderError(f"{lo} is not below {hi}")


_moebius_memo: dict[tuple, int] = {}


def moebius(lattice: str, lo: SetPartition, hi: SetPartition) -> int:
    """Möbius function of the interval [lo, hi] in the set-partition or
    non-crossing lattice, by the defining recursion
    mu(lo, lo) = 1, mu(lo, hi) = -sum over lo <= M < hi of mu(lo, M)."""
    _check_interval_args(lattice, lo, hi)
    key = (lattice, standardize(lo).blocks, standardize(hi).blocks)
    if key in _moebius_memo:
        return _moebius_memo[key]

    elements = _interval(lattice, lo, hi)
    # finer partitions first, so each mu value is ready when summed
    elements.sort(key=lambda p: -len(p.blocks))
    mu: dict[tuple, int] = {}
    for m in elements:
        if m.blocks == lo.blocks:
            mu[m.blocks] = 1
        else:
            # sum over lo <= p < m; strict refinement means more blocks
            below = [p for p in elements
                     if len(p.blocks) > len(m.blocks) and refines(p, m)]
            mu[m.blocks] = -sum(mu[p.blocks] for p in below)
    value = mu[hi.blocks]
    _moebius_memo[key] = value
    return value


@lru_cache(maxsize=None)
def moebius_to_top(lattice: str, n: int) -> dict[tuple[Block, ...], int]:
    """mu(L, 1̂_n) for every L in the chosen lattice of [n], via the dual form
    of the defining recursion: mu(L, K) = -sum over L < M <= K of mu(M, K).

    Used by the transform layer, which needs the whole column at once; the
    per-interval ``moebius`` recursion would redo shared work per element.
    """
    if lattice == "set":
        elements = list(_all_set_partitions(n))
    elif lattice == "nc":
        elements = list(_all_nc_partitions(n))
    else:
        raise ValueError(f"unknown lattice selector: {lattice!r}")
    # coarser partitions first
    elements.sort(key=lambda p: len(p.blocks))
    mu: dict[tuple[Block, ...], int] = {}
    for m in elements:
        if len(m.blocks) == 1:
            mu[m.blocks] = 1
            continue
        total = 0
        for bp in _rgs_partitions(len(m.blocks)):
            if len(bp) == len(m.blocks):
                continue  # m itself
            merged = tuple(sorted(
                (tuple(sorted(x for idx in cell for x in m.blocks[idx - 1]))
                 for cell in bp), key=lambda b: b[0]))
            if lattice == "nc" and not _blocks_noncrossing(merged):
                continue
            total += mu[merged]
        mu[m.blocks] = -total
    return mu


# ---------------------------------------------------------------------------
# parsing


_BLOCK_RE = re.compile(r"\{([0-9,\s]*)\}")


def parse_partition(text: str, noncrossing: bool = True) -> SetPartition:
    """Parse the ``{1,4}{2,3}`` text encoding.  An optional ``on {...}``
    suffix is accepted and checked against the union of the blocks."""
    body = text.strip()
    explicit_carrier = None
    if " on " in body:
        body, _, carrier_part = body.partition(" on ")
        m = _BLOCK_RE.fullmatch(carrier_part.strip())
        if not m:
            raise ParseError(f"malformed carrier suffix in {text!r}")
        explicit_carrier = tuple(sorted(int(x) for x in m.group(1).split(",") if x.strip()))
    pos = 0
    blocks = []
    body = body.strip()
    while pos < len(body):
        m = _BLOCK_RE.match(body, pos)
        if not m:
            raise ParseError(f"malformed partition encoding: {text!r}")
        members = [int(x) for x in m.group(1).split(",") if x.strip()]
        if not members:
            raise ParseError(f"empty block in {text!r}")
        blocks.append(members)
        pos = m.end()
    if not blocks:
        raise ParseError(f"no blocks in {text!r}")
    cls = NonCrossingPartition if noncrossing else SetPartition
    try:
        p = cls.of(blocks)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if explicit_carrier is not None and p.carrier != explicit_carrier:
        raise ParseError(f"carrier suffix does not match blocks in {text!r}")
    return p


def partition_from_json(data: dict, noncrossing: bool = True) -> SetPartition:
    cls = NonCrossingPartition if noncrossing else SetPartition
    try:
        return cls.of(data["blocks"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad partition JSON: {data!r}") from exc


# independent count helpers, used for size guards and the CLI

def bell_number(n: int) -> int:
    """Bell numbers by the triangle recurrence."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def catalan_number(n: int) -> int:
    """Catalan numbers by the convolution recurrence."""
    cat = [1]
    for m in range(1, n + 1):
        cat.append(sum(cat[i] * cat[m - 1 - i] for i in range(m)))
    return cat[n]
