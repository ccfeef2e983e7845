"""Text format for maps.

    plmap r=1 n=2
    0 2 0
    1/4 1 1/4
    1/2 1/2 1/2

One header, then one ``left slope intercept`` line per segment. Several maps may
follow each other in one stream; blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from typing import Iterable, List

from .errors import ParseError
from .numeric import GroupParams, format_rational, parse_rational
from .plmap import PLMap, make


def serialize_plmap(x: PLMap, name: str = None) -> str:
    lines = [f"# {name}"] if name else []
    lines.append(f"plmap r={format_rational(x.params.r)} n={x.params.n}")
    for s in x.segments:
        lines.append(" ".join(format_rational(v) for v in s))
    return "\n".join(lines) + "\n"


def serialize_many(maps: Iterable[PLMap], names: Iterable[str] = None) -> str:
    names = list(names) if names is not None else None
    return "".join(serialize_plmap(x, names[i] if names else None) for i, x in enumerate(maps))


def _parse_header(line: str, lineno: int) -> GroupParams:
    fields = line.split()
    kv = {}
    for f in fields[1:]:
        key, sep, val = f.partition("=")
        if not sep or key not in ("r", "n") or key in kv:
            raise ParseError(f"bad header field {f!r}", lineno)
        kv[key] = val
    if set(kv) != {"r", "n"}:
        raise ParseError("header needs r=<rational> and n=<int>", lineno)
    try:
        n = int(kv["n"])
    except ValueError:
        raise ParseError(f"bad n {kv['n']!r}", lineno) from None
    r = parse_rational(kv["r"], lineno)
    try:
        return GroupParams(n, r)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc), lineno) from None


def parse_many(text: str) -> List[PLMap]:
    maps = []
    params, segs, start = None, [], None

    def flush():
        if params is None:
            return
        if not segs:
            raise ParseError("map has no segments", start)
        maps.append(make(params, segs))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.split()[0] == "plmap":
            flush()
            params, segs, start = _parse_header(line, lineno), [], lineno
            continue
        if params is None:
            raise ParseError("segment line before any 'plmap' header", lineno)
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'left slope intercept', got {line!r}", lineno)
        segs.append(tuple(parse_rational(p, lineno) for p in parts))
    flush()
    return maps


def parse_plmap(text: str) -> PLMap:
    maps = parse_many(text)
    if len(maps) != 1:
        raise ParseError(f"expected exactly one map, found {len(maps)}")
    return maps[0]
