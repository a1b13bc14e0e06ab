"""Text formats for graphs, embeddings and families.

Graph file::

    # comment
    4 6
    0 1
    ...

Embedding file, one keyword per line::

    orientation: ccw
    layer2: 0 1 2
    walk: 3
    rot 0: 1 3 2

Family file: one ordering per line, labels separated by spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .embedding import TwoOuterEmbedding
from .errors import InputError
from .graph import CircularOrdering, Graph, SeparationFamily


def _lines(text: str):
    """(line number, tokens) for every line that is not blank or a comment."""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


@dataclass
class Labels:
    """Maps external vertex names to 0..n-1 and back."""

    names: list[str] = field(default_factory=list)
    index: dict = field(default_factory=dict)

    @classmethod
    def identity(cls, n: int) -> Labels:
        names = [str(i) for i in range(n)]
        return cls(names, {s: i for i, s in enumerate(names)})

    def add(self, name: str) -> int:
        if name not in self.index:
            self.index[name] = len(self.names)
            self.names.append(name)
        return self.index[name]

    def get(self, name: str, where: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise InputError(f"{where}: unknown vertex {name!r}") from None

    def name(self, v: int) -> str:
        return self.names[v]


@dataclass
class GraphFile:
    graph: Graph
    labels: Labels

    @classmethod
    def parse(cls, text: str, named: bool = False) -> GraphFile:
        """Read a graph file.  With ``named`` the vertices may be any tokens;
        they get numbers in order of first appearance, and an optional
        ``labels:`` line fixes that order up front."""
        rows = list(_lines(text))
        labels = Labels()
        if rows and rows[0][1].startswith("labels:"):
            if not named:
                raise InputError(f"line {rows[0][0]}: labels line needs named vertices")
            for tok in rows[0][1][len("labels:"):].split():
                labels.add(tok)
            rows = rows[1:]
        if not rows:
            raise InputError("graph file is empty")
        no, head = rows[0]
        parts = head.split()
        try:
            n, m = int(parts[0]), int(parts[1])
            if len(parts) != 2 or n < 0 or m < 0:
                raise ValueError
        except (ValueError, IndexError):
            raise InputError(f"line {no}: header must be 'n m', got {head!r}") from None
        body = rows[1:]
        if len(body) != m:
            raise InputError(f"header says {m} edges but {len(body)} edge lines follow")
        if not named:
            labels = Labels.identity(n)
        pairs = []
        for no, line in body:
            toks = line.split()
            if len(toks) != 2:
                raise InputError(f"line {no}: expected 'u v', got {line!r}")
            if named:
                u, v = labels.add(toks[0]), labels.add(toks[1])
            else:
                try:
                    u, v = int(toks[0]), int(toks[1])
                except ValueError:
                    raise InputError(f"line {no}: vertex labels must be integers") from None
                if not (0 <= u < n and 0 <= v < n):
                    raise InputError(f"line {no}: vertex out of range 0..{n - 1}")
            if u == v:
                raise InputError(f"line {no}: self-loop at {toks[0]}")
            pairs.append((u, v))
        if named:
            if len(labels.names) > n:
                raise InputError(f"file names {len(labels.names)} vertices but the header says {n}")
            while len(labels.names) < n:
                labels.add(f"_{len(labels.names)}")
        try:
            g = Graph.from_edges(n, pairs)
        except InputError as ex:
            raise InputError(f"graph file: {ex}") from None
        return cls(g, labels)

    def format(self) -> str:
        g = self.graph
        out = []
        if self.labels.names != [str(i) for i in range(g.n)]:
            out.append("labels: " + " ".join(self.labels.names))
        out.append(f"{g.n} {g.m}")
        out += [f"{self.labels.name(u)} {self.labels.name(v)}" for u, v in g.sorted_edges]
        return "\n".join(out) + "\n"


@dataclass
class EmbeddingFile:
    embedding: TwoOuterEmbedding
    walks: Optional[list] = None

    @classmethod
    def parse(cls, text: str, gf: GraphFile) -> EmbeddingFile:
        g, labels = gf.graph, gf.labels
        orientation = "ccw"
        outer = None
        walks = []
        rot: dict[int, list[int]] = {}

        def ids(s, no):
            return [labels.get(t, f"line {no}") for t in s.split()]

        for no, line in _lines(text):
            key, sep, rest = line.partition(":")
            if not sep:
                raise InputError(f"line {no}: expected 'keyword: values', got {line!r}")
            key = key.strip()
            if key == "orientation":
                orientation = rest.strip()
            elif key == "layer2":
                outer = ids(rest, no)
            elif key == "walk":
                walks.append(ids(rest, no))
            elif key.startswith("rot "):
                who = ids(key[4:], no)
                if len(who) != 1:
                    raise InputError(f"line {no}: expected 'rot v: ...', got {line!r}")
                v = who[0]
                if v in rot:
                    raise InputError(f"line {no}: second rotation for {key[4:].strip()}")
                rot[v] = ids(rest, no)
            else:
                raise InputError(f"line {no}: unknown keyword {key!r}")
        if outer is None:
            raise InputError("embedding file has no layer2 line")
        missing = [labels.name(v) for v in range(g.n) if v not in rot]
        if missing:
            raise InputError(f"embedding file has no rotation for {missing[0]}")
        emb = TwoOuterEmbedding.from_parts(g, [rot[v] for v in range(g.n)], outer, orientation, walks or None)
        return cls(emb, walks or None)

    def format(self, labels: Optional[Labels] = None) -> str:
        emb = self.embedding
        labels = labels or Labels.identity(emb.g.n)
        name = labels.name

        def row(vs):
            return " ".join(name(v) for v in vs)

        out = ["orientation: ccw", "layer2: " + row(emb.outer)]
        out += ["walk: " + row(reversed(w)) for w in emb.inner_walks()]
        out += [f"rot {name(v)}: " + row(emb.rotation[v]) for v in range(emb.g.n)]
        return "\n".join(out) + "\n"


@dataclass
class FamilyFile:
    family: SeparationFamily

    @classmethod
    def parse(cls, text: str, labels: Labels) -> FamilyFile:
        n = len(labels.names)
        orders = []
        for no, line in _lines(text):
            seq = [labels.get(t, f"line {no}") for t in line.split()]
            if sorted(seq) != list(range(n)):
                raise InputError(f"line {no}: ordering is not a permutation of the {n} vertices")
            orders.append(CircularOrdering(seq))
        if not orders:
            raise InputError("family file has no orderings")
        return cls(SeparationFamily(orders))

    def format(self, labels: Optional[Labels] = None) -> str:
        rows = []
        for o in self.family:
            rows.append(" ".join(labels.name(v) if labels else str(v) for v in o.seq))
        return "\n".join(rows) + "\n"


def read_text(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as ex:
        raise InputError(f"cannot read {path}: {ex.strerror}") from None
