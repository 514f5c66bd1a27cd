"""graph6 encoding for graphs with at most 62 vertices."""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

MAX_N = 62
HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"{message}{where}")


def encode(g: Graph) -> str:
    if g.n > MAX_N:
        raise Graph6Error(f"n={g.n} exceeds the supported maximum {MAX_N}")
    out = [chr(63 + g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", i)
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise Graph6Error(f"n={n} exceeds the supported maximum {MAX_N}", 0)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(s) - 1}", min(len(s), 1 + need))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = need * 6 - k
    if pad and (ord(s[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph._trusted(n, tuple(rows))


def iter_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """(line number, graph6 token) for non-blank, non-comment lines.

    Only the first whitespace-separated field is read, so corpus files with
    trailing metadata double as plain graph6 lists.
    """
    for lineno, line in enumerate(lines, 1):
        tok = line.split(maxsplit=1)[0] if line.strip() else ""
        if not tok or tok.startswith("#"):
            continue
        yield lineno, tok


def read_graphs(fh: TextIO, source: str = "<input>") -> list[Graph]:
    out = []
    for lineno, tok in iter_lines(fh):
        try:
            out.append(decode(tok))
        except Graph6Error as exc:
            raise Graph6Error(f"{source}:{lineno}: {exc}") from exc
    return out
