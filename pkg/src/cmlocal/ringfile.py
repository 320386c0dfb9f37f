"""The line-oriented ring file format.

A ring file is a sequence of statements, one per line or separated by
``;``.  A line ending in ``,`` continues on the next line.  Statements::

    name wang
    char 32003
    vars x, y, z, u, v
    ideal z^2, z*u, z*v, u*v, y*z - u^3, x*z - v^3
    seed 7
    expect type 3
    expect e 6 8 3

``#`` starts a comment.  Polynomials use integer coefficients, variables,
``^``, ``*``, ``+``, ``-`` and parentheses; juxtaposition multiplies, and an
unknown identifier such as ``zu`` is split into declared variables when that
is unambiguous.
"""

import re

from .field import DEFAULT_CHAR, Field
from .presentation import PresentationError, RingPresentation


class RingFileError(PresentationError):
    def __init__(self, message, line=None, col=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
KEYWORDS = ("name", "char", "vars", "ideal", "seed", "expect")


def _statements(text):
    """Yield (line, col, keyword, rest) for each statement."""
    pending = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if pending is not None:
            line = pending[2] + " " + line
            start_line, start_col = pending[0], pending[1]
        else:
            start_line, start_col = lineno, None
        if line.rstrip().endswith(","):
            pending = (start_line, start_col, line.rstrip())
            continue
        pending = None
        col = 1
        for part in line.split(";"):
            stripped = part.strip()
            if stripped:
                lead = len(part) - len(part.lstrip())
                kw, _, rest = stripped.partition(" ")
                c = start_col if start_col is not None else col + lead
                yield start_line, c, kw, rest.strip()
            col += len(part) + 1
            start_col = None
    if pending is not None:
        yield pending[0], pending[1] or 1, *pending[2].strip().partition(" ")[::2]


class _PolyParser:
    def __init__(self, text, names, line, col):
        self.text = text
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}
        self.line = line
        self.col0 = col
        self.toks = []
        for m in _TOKEN.finditer(text):
            if m.group(0).strip() == "":
                continue
            kind = "int" if m.group(1) else "id" if m.group(2) else "op"
            value = m.group(1) or m.group(2) or m.group(3)
            self.toks.append((kind, value, m.start(m.lastindex)))
        self.pos = 0

    def error(self, msg, offset=None):
        if offset is None:
            offset = self.toks[self.pos][2] if self.pos < len(self.toks) else len(self.text)
        raise RingFileError(msg, self.line, self.col0 + offset)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse_list(self):
        out = []
        while True:
            out.append(self.expr())
            kind, val, _ = self.peek()
            if kind is None:
                return out
            if val == ",":
                self.take()
                continue
            self.error(f"unexpected {val!r}")

    def expr(self):
        kind, val, _ = self.peek()
        sign = 1
        if val in ("+", "-"):
            self.take()
            sign = -1 if val == "-" else 1
        acc = _scale(self.term(), sign)
        while True:
            kind, val, _ = self.peek()
            if val not in ("+", "-"):
                return acc
            self.take()
            acc = _add(acc, self.term(), -1 if val == "-" else 1)

    def term(self):
        acc = self.power()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
                acc = _mul(acc, self.power())
            elif kind in ("int", "id") or val == "(":
                acc = _mul(acc, self.power())
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if val == "^":
            self.take()
            kind, val, off = self.take()
            if kind != "int":
                self.error("exponent must be a non-negative integer", off)
            e = int(val)
            out = {(0,) * len(self.names): 1}
            for _ in range(e):
                out = _mul(out, base)
            return out
        return base

    def atom(self):
        kind, val, off = self.take()
        n = len(self.names)
        if kind == "int":
            return {(0,) * n: int(val)} if int(val) else {}
        if kind == "id":
            parts = self._split(val)
            if parts is None:
                self.error(f"unknown variable {val!r}", off)
            e = [0] * n
            for name in parts:
                e[self.index[name]] += 1
            return {tuple(e): 1}
        if val == "(":
            inner = self.expr()
            kind, close, off2 = self.take()
            if close != ")":
                self.error("expected ')'", off2)
            return inner
        if kind is None:
            self.error("unexpected end of expression", off)
        self.error(f"unexpected {val!r}", off)

    def _split(self, ident):
        if ident in self.index:
            return [ident]
        names = sorted(self.names, key=len, reverse=True)
        memo = {}

        def go(i):
            if i == len(ident):
                return []
            if i in memo:
                return memo[i]
            memo[i] = None
            for name in names:
                if ident.startswith(name, i):
                    rest = go(i + len(name))
                    if rest is not None:
                        memo[i] = [name] + rest
                        break
            return memo[i]

        return go(0)


def _add(f, g, sign=1):
    h = dict(f)
    for m, c in g.items():
        v = h.get(m, 0) + sign * c
        if v:
            h[m] = v
        else:
            h.pop(m, None)
    return h


def _scale(f, c):
    return {m: c * v for m, v in f.items()}


def _mul(f, g):
    h = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            v = h.get(m, 0) + c1 * c2
            if v:
                h[m] = v
            else:
                h.pop(m, None)
    return h


def parse_polynomials(text, names, line=1, col=1):
    """Parse a comma-separated list of polynomials into integer-coefficient dicts."""
    if not text.strip():
        return []
    return _PolyParser(text, tuple(names), line, col).parse_list()


def parse_ring_file(text, char=None, seed=None):
    """Parse ring file text into a ``RingPresentation``.

    ``char`` and ``seed`` override the values in the file.
    """
    fields = {"name": None, "char": None, "vars": None, "seed": None}
    ideal_stmt = None
    expect = {}
    for line, col, kw, rest in _statements(text):
        if kw not in KEYWORDS:
            raise RingFileError(f"unknown statement {kw!r}", line, col)
        if kw == "expect":
            key, _, vals = rest.partition(" ")
            if not key:
                raise RingFileError("expect needs a key", line, col)
            expect[key] = vals.strip()
            continue
        if kw == "ideal":
            if ideal_stmt is not None:
                raise RingFileError("duplicate ideal statement", line, col)
            ideal_stmt = (line, col + len(kw) + 1, rest)
            continue
        if fields[kw] is not None:
            raise RingFileError(f"duplicate {kw} statement", line, col)
        if kw in ("char", "seed"):
            try:
                fields[kw] = int(rest)
            except ValueError:
                raise RingFileError(f"{kw} must be an integer, got {rest!r}", line, col) from None
            if kw == "char":
                try:
                    Field(fields[kw])
                except ValueError as exc:
                    raise RingFileError(str(exc), line, col) from None
        elif kw == "vars":
            names = [v for v in re.split(r"[\s,]+", rest) if v]
            for v in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                    raise RingFileError(f"bad variable name {v!r}", line, col)
            fields["vars"] = names
        else:
            fields[kw] = rest
    names = fields["vars"]
    if ideal_stmt is None:
        raise RingFileError("missing ideal statement")
    line, col, body = ideal_stmt
    if names is None:
        names = _infer_vars(body)
        if not names:
            raise RingFileError("missing vars statement", line)
    gens = parse_polynomials(body, names, line, col)
    p = char if char is not None else fields["char"] if fields["char"] is not None else DEFAULT_CHAR
    s = seed if seed is not None else fields["seed"] if fields["seed"] is not None else 0
    for g in gens:
        if (0,) * len(names) in g:
            raise RingFileError("generator has a nonzero constant term (unit ideal locally)", line, col)
    try:
        return RingPresentation(names, gens, p, s, fields["name"], {"expect": expect})
    except ValueError as exc:
        if isinstance(exc, RingFileError):
            raise
        raise RingFileError(str(exc), line, col) from None


def _infer_vars(body):
    """Single-letter variables in order of appearance (used when vars is omitted)."""
    seen = []
    for m in re.finditer(r"[A-Za-z_][A-Za-z0-9_]*", body):
        for ch in m.group(0):
            if ch.isalpha() and ch not in seen:
                seen.append(ch)
    return seen


def format_ring_file(pres):
    """Render a presentation as ring file text; parsing it gives it back."""
    from .poly import format_poly

    lines = []
    if pres.name:
        lines.append(f"name {pres.name}")
    lines.append(f"char {pres.char}")
    lines.append("vars " + ", ".join(pres.names))
    gens = [format_poly(g.terms, pres.names, pres.ring.field) for g in pres.polys]
    lines.append("ideal " + ",\n    ".join(gens) if gens else "ideal 0")
    if pres.seed:
        lines.append(f"seed {pres.seed}")
    for key, val in sorted(pres.meta.get("expect", {}).items()):
        lines.append(f"expect {key} {val}")
    return "\n".join(lines) + "\n"


def read_ring_file(path, char=None, seed=None):
    with open(path) as fh:
        text = fh.read()
    return parse_ring_file(text, char=char, seed=seed)
