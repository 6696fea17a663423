"""Penn-Treebank-style bracketed trees and subtree-pattern extraction.

Trees are consumed from text produced by any external constituency parser
(one bracketed sentence per line); this toolkit does not parse natural
language itself. An outer ``(ROOT ...)`` or ``(TOP ...)`` wrapper is
stripped on read.

The grammar features are depth-1..3 truncations of the label tree (word
leaves removed, so part-of-speech preterminals are the deepest level).
Depth 1 at a node is the node plus its immediate children, i.e. a CFG
production. A deeper truncation that reveals no new level compared to the
previous depth is skipped, so a node contributes between 1 and 3 patterns.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .errors import TreeParseError
from .textcore import read_text_file

logger = logging.getLogger(__name__)

_SPECIAL = "()"


@dataclass(frozen=True)
class ParseTree:
    """Internal node: a non-terminal label over child trees or word leaves."""

    label: str
    children: tuple["ParseTree | str", ...]

    def __post_init__(self):
        if not self.label:
            raise ValueError("tree labels must be non-empty")
        if not self.children:
            raise ValueError(f"node {self.label!r} must have at least one child")

    @property
    def is_preterminal(self) -> bool:
        return all(isinstance(child, str) for child in self.children)


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _read_symbol(text: str, pos: int) -> tuple[str, int]:
    start = pos
    while pos < len(text) and not text[pos].isspace() and text[pos] not in _SPECIAL:
        pos += 1
    return text[start:pos], pos


def _parse_node(text: str, pos: int) -> tuple[ParseTree, int]:
    # Caller guarantees text[pos] == "(".
    pos = _skip_ws(text, pos + 1)
    label, pos = _read_symbol(text, pos)
    if not label:
        raise TreeParseError("empty node", offset=pos + 1)
    children: list[ParseTree | str] = []
    while True:
        pos = _skip_ws(text, pos)
        if pos >= len(text):
            raise TreeParseError("unbalanced parentheses: unexpected end of input", offset=pos + 1)
        ch = text[pos]
        if ch == ")":
            pos += 1
            break
        if ch == "(":
            child, pos = _parse_node(text, pos)
            children.append(child)
        else:
            token, pos = _read_symbol(text, pos)
            children.append(token)
    if not children:
        raise TreeParseError(f"node {label!r} has no children", offset=pos)
    return ParseTree(label, tuple(children)), pos


def parse_ptb(line: str) -> ParseTree | None:
    """Parse one bracketed sentence; offsets in errors are 1-based.

    Empty/whitespace-only lines are skipped with a warning (returns None).
    """
    pos = _skip_ws(line, 0)
    if pos == len(line):
        logger.warning("skipping empty tree line")
        return None
    if line[pos] != "(":
        raise TreeParseError(f"expected '(' but found {line[pos]!r}", offset=pos + 1)
    tree, pos = _parse_node(line, pos)
    pos = _skip_ws(line, pos)
    if pos != len(line):
        raise TreeParseError("trailing content after tree", offset=pos + 1)
    if (
        tree.label in ("ROOT", "TOP")
        and len(tree.children) == 1
        and isinstance(tree.children[0], ParseTree)
    ):
        tree = tree.children[0]
    return tree


def serialize(tree: ParseTree | str) -> str:
    """Canonical one-line form: single spaces, no empty nodes."""
    if isinstance(tree, str):
        return tree
    return "(" + tree.label + " " + " ".join(serialize(child) for child in tree.children) + ")"


def read_tree_file(path: str | Path) -> list[ParseTree]:
    """One tree per line; blank lines skipped, ``#`` lines are comments."""
    trees = []
    for lineno, line in enumerate(read_text_file(path).splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        try:
            tree = parse_ptb(line)
        except TreeParseError as exc:
            raise TreeParseError(f"{path}:{lineno}: {exc}") from None
        if tree is not None:
            trees.append(tree)
    return trees


def iter_nodes(tree: ParseTree) -> Iterator[ParseTree]:
    """All internal (labeled) nodes, preorder."""
    yield tree
    for child in tree.children:
        if isinstance(child, ParseTree):
            yield from iter_nodes(child)


def leaf_tokens(tree: ParseTree) -> Iterator[str]:
    for child in tree.children:
        if isinstance(child, str):
            yield child
        else:
            yield from leaf_tokens(child)


_LabelShape = tuple[str, tuple]


def _label_shape(tree: ParseTree) -> _LabelShape:
    # Drop word leaves; a preterminal becomes a leaf of the label tree.
    kids = tuple(_label_shape(c) for c in tree.children if isinstance(c, ParseTree))
    return (tree.label, kids)


def _encode(shape: _LabelShape, depth: int) -> str:
    label, kids = shape
    if not kids or depth == 0:
        return label
    return "(" + label + " " + " ".join(_encode(k, depth - 1) for k in kids) + ")"


def extract_subtrees(tree: ParseTree) -> Counter[str]:
    """Depth-1..3 label-tree patterns rooted at every internal node.

    Word leaves never appear in patterns, so the multiset is invariant
    under relabeling the lexical leaves. A depth whose truncation equals
    the previous depth's emission from the same node is suppressed.
    """
    patterns: Counter[str] = Counter()
    stack = [_label_shape(tree)]
    while stack:
        shape = stack.pop()
        _, kids = shape
        if not kids:
            continue
        previous = None
        for depth in (1, 2, 3):
            encoded = _encode(shape, depth)
            if encoded != previous:
                patterns[encoded] += 1
            previous = encoded
        stack.extend(kids)
    return patterns


def document_patterns(trees: Sequence[ParseTree], binary: bool = False) -> Counter[str]:
    """Pool patterns over a document's sentence trees.

    With ``binary`` each pattern counts at most once per sentence instead
    of with multiplicity.
    """
    pooled: Counter[str] = Counter()
    for tree in trees:
        patterns = extract_subtrees(tree)
        if binary:
            pooled.update(dict.fromkeys(patterns, 1))
        else:
            pooled.update(patterns)
    return pooled
