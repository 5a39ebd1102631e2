"""Hierarchy trees of non-crossing partitions and the induced coproduct.

A planar rooted tree is a nested tuple: a node is the tuple of its ordered
child subtrees, so ``()`` is a bare root (the unit tree) and ``((), ())`` is
a root with two leaf children.  The degree of a tree is its number of
non-root vertices.

The hierarchy map sends a partition to the tree of its block nesting: one
vertex per block, parent the minimal strictly containing block, children
ordered by block minimum.  The map forgets block contents, so it is
many-to-one.

The tree coproduct sums over admissible edge cuts (at most one cut edge on
any root-to-leaf path).  Cut subtrees are regrafted under new roots in the
pruned part, with one shared root per maximal run of consecutive cut sibling
edges; non-adjacent cuts give separate trees of an ordered forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coefficients import ONE
from .errors import ParseError
from .partitions import NonCrossingPartition
from .tensor import LinComb, add_into

Tree = tuple            # nested tuples of children; () is the bare root
Forest = tuple          # tuple[Tree, ...]; () is the empty forest
EdgePath = tuple        # child indices from the root; (2, 0) = third child's first child

UNIT_TREE: Tree = ()


def tree_degree(t: Tree) -> int:
    """Number of non-root vertices."""
    return sum(1 + tree_degree(child) for child in t)


def tree_text(t: Tree) -> str:
    return "(" + "".join(tree_text(child) for child in t) + ")"


def forest_text(f: Forest) -> str:
    return " ".join(tree_text(t) for t in f) if f else "1"


def parse_tree(text: str) -> Tree:
    body = text.strip()
    tree, pos = _parse_node(body, 0)
    if pos != len(body):
        raise ParseError(f"trailing characters in tree encoding: {text!r}")
    return tree


def _parse_node(s: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(s) or s[pos] != "(":
        raise ParseError(f"expected '(' at position {pos} in {s!r}")
    pos += 1
    children = []
    while pos < len(s) and s[pos] == "(":
        child, pos = _parse_node(s, pos)
        children.append(child)
    if pos >= len(s) or s[pos] != ")":
        raise ParseError(f"expected ')' at position {pos} in {s!r}")
    return tuple(children), pos + 1


def tree_to_json(t: Tree) -> list:
    return [tree_to_json(child) for child in t]


def tree_from_json(data) -> Tree:
    return tuple(tree_from_json(child) for child in data)


# ---------------------------------------------------------------------------
# hierarchy map


def hierarchy_tree(p: NonCrossingPartition) -> Tree:
    """The block-nesting tree of a non-crossing partition, with an extra
    unlabeled root above the outermost blocks."""
    blocks = p.blocks
    children: dict[int, list[int]] = {i: [] for i in range(len(blocks))}
    top: list[int] = []
    for i, block in enumerate(blocks):
        parent = None
        for j, other in enumerate(blocks):
            if i == j or not _strictly_inside(block, other):
                continue
            if parent is None or _strictly_inside(blocks[j], blocks[parent]):
                parent = j
        if parent is None:
            top.append(i)
        else:
            children[parent].append(i)

    def build(indices: list[int]) -> Tree:
        ordered = sorted(indices, key=lambda i: blocks[i][0])
        return tuple(build(children[i]) for i in ordered)

    return build(top)


def _strictly_inside(inner, outer) -> bool:
    return outer[0] < inner[0] and inner[-1] < outer[-1]


# ---------------------------------------------------------------------------
# admissible cuts


@dataclass(frozen=True)
class EdgeCut:
    """A set of edges meeting each root-to-leaf path at most once; an edge
    is named by the child-index path of its arrival vertex."""

    edges: tuple  # tuple[EdgePath, ...], sorted

    @classmethod
    def of(cls, edges) -> "EdgeCut":
        return cls(tuple(sorted(edges)))


@lru_cache(maxsize=None)
def admissible_edge_cuts(t: Tree) -> tuple[EdgeCut, ...]:
    """Every admissible cut of the tree, the empty cut first, then in
    lexicographic order of the sorted edge lists."""
    cuts = [EdgeCut.of(edges) for edges in _cut_sets(t, ())]
    cuts.sort(key=lambda c: c.edges)
    return tuple(cuts)


def _cut_sets(t: Tree, prefix: EdgePath):
    """All admissible edge sets of the subtree at ``prefix``: per child,
    either cut its edge (closing every path through it) or leave it and
    choose an admissible set inside it (which may be empty)."""
    options_per_child = []
    for i, child in enumerate(t):
        path = prefix + (i,)
        child_options = [(path,)]
        child_options.extend(_cut_sets(child, path))
        options_per_child.append(child_options)
    combos = [()]
    for options in options_per_child:
        combos = [acc + choice for acc in combos for choice in options]
    return combos


# ---------------------------------------------------------------------------
# tree coproduct


def _subtree_at(t: Tree, path: EdgePath) -> Tree:
    for i in path:
        t = t[i]
    return t


def _remove_cut(t: Tree, cut_set: frozenset, prefix: EdgePath) -> Tree:
    kept = []
    for i, child in enumerate(t):
        path = prefix + (i,)
        if path in cut_set:
            continue
        kept.append(_remove_cut(child, cut_set, path))
    return tuple(kept)


def _pruned_forest(t: Tree, cut: EdgeCut) -> Forest:
    """Cut subtrees regrafted under new roots, one root per maximal run of
    consecutive cut sibling edges, in left-to-right planar order."""
    cut_set = set(cut.edges)
    forest: list[Tree] = []

    def walk(node: Tree, prefix: EdgePath):
        run: list[Tree] = []
        for i, child in enumerate(node):
            path = prefix + (i,)
            if path in cut_set:
                run.append(child)
            else:
                if run:
                    forest.append(tuple(run))
                    run = []
                walk(child, path)
        if run:
            forest.append(tuple(run))

    walk(t, ())
    return tuple(forest)


def tree_coproduct(t: Tree) -> LinComb:
    """Sum over admissible cuts of rooted part ⊗ pruned forest, keyed by
    (Tree, Forest) pairs; includes t ⊗ 1 (empty cut) and 1 ⊗ t (crown cut)."""
    out: LinComb = {}
    for cut in admissible_edge_cuts(t):
        rooted = _remove_cut(t, frozenset(cut.edges), ())
        pruned = _pruned_forest(t, cut)
        add_into(out, (rooted, pruned), ONE)
    return out


def tree_tensor_text(terms: LinComb) -> str:
    """Canonical text of a coproduct value on trees."""
    from .coefficients import coeff_str

    def key_text(key) -> str:
        rooted, pruned = key
        return f"{tree_text(rooted)} ⊗ {forest_text(pruned)}"

    parts = []
    for key in sorted(terms, key=key_text):
        c = terms[key]
        body = key_text(key)
        parts.append(body if c == 1 else f"{coeff_str(c)}·{body}")
    return " + ".join(parts) if parts else "0"
