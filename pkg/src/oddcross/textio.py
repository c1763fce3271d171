"""Scheme serialization: the line-oriented text format and the compact form.

Canonical text format, one scheme per file:

    n=5
    1: 2-4 3-5
    2: 1-3 4-5
    3: 1-4 2-5
    4: 1-5 2-3
    5: 1-2 3-4

Compact form (accepted on input for n <= 9): double-digit pair tokens
with axes separated by "/", e.g. "24 35 / 13 45 / 14 25 / 15 23 / 12 34".
"""

from __future__ import annotations

import os
import sys
from typing import Optional

from .errors import SchemeSyntaxError
from .schemes import Scheme, validate_scheme


def emit_scheme_text(scheme: Scheme) -> str:
    """Canonical serialization; parse_scheme_text inverts it exactly."""
    lines = [f"n={scheme.dim.n}"]
    for matching in scheme.matchings:
        lines.append(f"{matching.axis}: {matching}")
    return "\n".join(lines) + "\n"


def _parse_pair_token(token: str, lineno: int) -> tuple:
    lo, dash, hi = token.partition("-")
    if dash:
        if not (lo.isdigit() and hi.isdigit()):
            raise SchemeSyntaxError(f"bad pair token {token!r}", line=lineno)
        return int(lo), int(hi)
    if len(token) == 2 and token.isdigit():
        return int(token[0]), int(token[1])
    raise SchemeSyntaxError(
        f"bad pair token {token!r} (want 'lo-hi' or a two-digit code)", line=lineno
    )


def _parse_full(lines) -> Scheme:
    header = lines[0][1].strip()
    if not header.startswith("n=") or not header[2:].isdigit():
        raise SchemeSyntaxError(f"expected 'n=<odd>' header, got {header!r}", line=lines[0][0])
    n = int(header[2:])
    by_axis: dict[int, list] = {}
    for lineno, line in lines[1:]:
        text = line.strip()
        if not text:
            continue
        axis_part, colon, rest = text.partition(":")
        if not colon or not axis_part.strip().isdigit():
            raise SchemeSyntaxError(f"expected '<axis>: pairs', got {text!r}", line=lineno)
        axis = int(axis_part)
        if not 1 <= axis <= n:
            raise SchemeSyntaxError(f"axis {axis} out of range 1..{n}", line=lineno)
        if axis in by_axis:
            raise SchemeSyntaxError(f"axis {axis} listed twice", line=lineno)
        by_axis[axis] = [_parse_pair_token(tok, lineno) for tok in rest.split()]
    missing = [k for k in range(1, n + 1) if k not in by_axis]
    if missing:
        raise SchemeSyntaxError(f"no line for axis {missing[0]}")
    return validate_scheme(n, [by_axis[k] for k in range(1, n + 1)])


def _parse_compact(text: str, n: Optional[int]) -> Scheme:
    groups = [g for g in text.replace("\n", " ").split("/")]
    if n is not None and len(groups) != n:
        raise SchemeSyntaxError(f"expected {n} axis groups, found {len(groups)}")
    pair_lists = []
    for group in groups:
        if not group.split():
            raise SchemeSyntaxError("empty axis group in compact scheme text")
        pairs = []
        for token in group.split():
            if not (len(token) == 2 and token.isdigit()):
                raise SchemeSyntaxError(
                    f"bad compact token {token!r} (two digits, so n <= 9)"
                )
            pairs.append((int(token[0]), int(token[1])))
        pair_lists.append(pairs)
    return validate_scheme(len(pair_lists), pair_lists)


def parse_scheme_text(text: str, n: Optional[int] = None) -> Scheme:
    """Parse either the canonical format or the compact double-digit form.

    For the compact form the dimension is inferred from the number of "/"
    separated groups unless ``n`` is given explicitly.
    """
    numbered = [(i + 1, line) for i, line in enumerate(text.splitlines())]
    meaningful = [(i, l) for i, l in numbered if l.strip() and not l.lstrip().startswith("#")]
    if not meaningful:
        raise SchemeSyntaxError("empty scheme text")
    if meaningful[0][1].lstrip().startswith("n="):
        return _parse_full(meaningful)
    return _parse_compact("\n".join(l for _, l in meaningful), n)


def load_scheme(source: str, n: Optional[int] = None) -> Scheme:
    """Load a scheme from a file path, "-" for stdin, or inline text."""
    if source == "-":
        return parse_scheme_text(sys.stdin.read(), n)
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_scheme_text(fh.read(), n)
    return parse_scheme_text(source, n)
