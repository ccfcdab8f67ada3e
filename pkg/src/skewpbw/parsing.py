"""Text formats: polynomial/vector expressions and algebra definition files.

Expression syntax::

    expr   := term (("+" | "-") term)*
    term   := factor (["*"] factor | "/" NUMBER)*     # juxtaposition multiplies
    factor := "-" factor | atom (("^" | "**") NUMBER)?
    atom   := NUMBER | NAME | "i" | "(" expr ")"
    vector := "[" expr ("," expr)* "]"

Products are evaluated left to right in the algebra, so ``D2*D1`` and
``D1*D2`` give different normal forms.  Algebra files are line oriented
with ``#`` comments::

    algebra NAME
    coeff Q | Qi | cpoly (Q|Qi) NAME+ | skewpoly (Q|Qi) NAME (id|conj)
    vars NAME+
    rel NAME * NAME = EXPR            # left name later in the vars order
    sigma NAME : NAME -> EXPR, ...    # "i -> -i" selects conjugation on scalars
    sigmainv NAME : NAME -> EXPR, ...
    delta NAME : NAME -> EXPR, ...
"""

import re
from fractions import Fraction

from .algebra import Poly, SkewPBWExtension, Vec
from .coeffring import PolynomialRing, RingDerivation, RingEndo, SkewPolynomialRing
from .order import DEFAULT_ORDER
from .scalars import QQ, QQi

__all__ = ["ParseError", "parse_expr", "parse_exprs", "parse_algebra",
           "parse_ring_expr", "format_poly", "format_vec", "format_elem",
           "split_exprs"]


class ParseError(ValueError):
    """Syntax or validation error with a 1-based source location."""

    def __init__(self, msg, line=None, col=None):
        self.msg, self.line, self.col = msg, line, col
        where = ""
        if line is not None:
            where = f"line {line}, col {col}: " if col is not None else f"line {line}: "
        elif col is not None:
            where = f"col {col}: "
        super().__init__(where + msg)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()\[\],]))")


def _tokenize(text, line=None, col0=0):
    toks, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", line, col0 + bad + 1)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("num", int(m.group(1)), col0 + start + 1))
        elif m.group(2):
            toks.append(("name", m.group(2), col0 + start + 1))
        else:
            op = m.group(3)
            toks.append(("op", "^" if op == "**" else op, col0 + start + 1))
        pos = m.end()
    toks.append(("end", None, col0 + len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text, line=None, col0=0):
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def expect(self, op):
        t = self.next()
        if t[0] != "op" or t[1] != op:
            raise self.error(f"expected {op!r}", t)
        return t

    def at_op(self, *ops):
        t = self.peek()
        return t[0] == "op" and t[1] in ops

    def parse_top(self):
        node = self.vector() if self.at_op("[") else self.expr()
        if self.peek()[0] != "end":
            raise self.error("unexpected trailing input")
        return node

    def vector(self):
        start = self.expect("[")
        items = [self.expr()]
        while self.at_op(","):
            self.next()
            items.append(self.expr())
        self.expect("]")
        return ("vec", items, start[2])

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            op = self.next()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def _starts_atom(self):
        t = self.peek()
        return t[0] in ("num", "name") or (t[0] == "op" and t[1] == "(")

    def term(self):
        node = self.factor()
        while True:
            if self.at_op("*"):
                self.next()
                node = ("mul", node, self.factor())
            elif self.at_op("/"):
                self.next()
                t = self.next()
                if t[0] != "num" or t[1] == 0:
                    raise self.error("division only by a nonzero integer literal", t)
                node = ("mul", node, ("num", Fraction(1, t[1]), t[2]))
            elif self._starts_atom():
                node = ("mul", node, self.factor())
            else:
                return node

    def factor(self):
        if self.at_op("-"):
            self.next()
            return ("neg", self.factor())
        if self.at_op("+"):
            self.next()
            return self.factor()
        node = self.atom()
        if self.at_op("^"):
            self.next()
            t = self.next()
            if t[0] != "num":
                raise self.error("exponent must be a natural number", t)
            node = ("pow", node, t[1])
        return node

    def atom(self):
        t = self.next()
        if t[0] == "num":
            return ("num", Fraction(t[1]), t[2])
        if t[0] == "name":
            return ("name", t[1], t[2])
        if t[0] == "op" and t[1] == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise self.error("expected a number, a symbol or '('", t)


def _parse(text, line=None, col0=0):
    return _Parser(text, line, col0).parse_top()


# -- evaluation --------------------------------------------------------

def _evaluate(node, leaf, line=None):
    """Fold an AST with ``leaf(kind, value, col)`` for numbers and names."""
    kind = node[0]
    if kind in ("num", "name"):
        return leaf(kind, node[1], node[2])
    if kind == "neg":
        return -_evaluate(node[1], leaf, line)
    if kind == "pow":
        base = _evaluate(node[1], leaf, line)
        out = base ** node[2] if node[2] else leaf("num", Fraction(1), None)
        return out
    a = _evaluate(node[1], leaf, line)
    b = _evaluate(node[2], leaf, line)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ParseError(f"unexpected {kind}", line)


def _ring_leaf(ring, line):
    names = getattr(ring, "names", ())

    def leaf(kind, value, col):
        if kind == "num":
            return ring.scalar(value) if hasattr(ring, "scalar") and ring.kind != "field" else ring(value)
        if value in names:
            return ring.gens[names.index(value)]
        if value == "i":
            if not ring.base.has_i:
                raise ParseError("imaginary unit 'i' outside a Gaussian field", line, col)
            return ring(QQi.i) if ring.kind == "field" else ring.scalar(QQi.i)
        raise ParseError(f"unknown symbol {value!r}", line, col)
    return leaf


def parse_ring_expr(text, ring, line=None, col0=0):
    """Parse an element of a coefficient ring."""
    node = _parse(text, line, col0)
    if node[0] == "vec":
        raise ParseError("vector where a ring element was expected", line, node[2])
    return _evaluate(node, _ring_leaf(ring, line), line)


def _alg_leaf(alg, line):
    ring = alg.ring
    rleaf = _ring_leaf(ring, line)

    def leaf(kind, value, col):
        if kind == "name" and value in alg.names:
            return alg.var(value)
        return alg.const(rleaf(kind, value, col))
    return leaf


def parse_expr(text, alg, rank=None, line=None):
    """Parse a polynomial of ``alg`` or a bracketed vector of polynomials."""
    node = _parse(text, line)
    leaf = _alg_leaf(alg, line)
    if node[0] == "vec":
        comps = [_evaluate(n, leaf, line) for n in node[1]]
        if rank is not None and len(comps) != rank:
            raise ParseError(f"vector has {len(comps)} entries, expected {rank}", line, node[2])
        return alg.vector(comps)
    return _evaluate(node, leaf, line)


def split_exprs(text):
    """Split source text into ``(line, expression)`` items, one per line.

    Newlines inside brackets or parentheses continue the expression;
    ``#`` starts a comment.
    """
    out, buf, depth, start = [], [], 0, None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip() and depth == 0:
            continue
        if start is None:
            start = lineno
        buf.append(body)
        depth += body.count("[") + body.count("(") - body.count("]") - body.count(")")
        if depth <= 0:
            out.append((start, " ".join(buf).strip()))
            buf, depth, start = [], 0, None
    if buf:
        raise ParseError("unbalanced brackets", start)
    return out


def parse_exprs(text, alg):
    return [parse_expr(src, alg, line=ln) for ln, src in split_exprs(text)]


# -- algebra files -----------------------------------------------------

_FIELDS = {"Q": QQ, "Qi": QQi}


def _is_rational_const(ring, c):
    t = ring.terms(c)
    if not t:
        return True
    if len(t) != 1:
        return False
    (e, v), = t.items()
    return not any(e) and not getattr(v, "im", 0)


def _formal(node, ring, varnames, line):
    """Evaluate to ``{word: coeff}`` keeping coefficients left of the variables."""
    rleaf = _ring_leaf(ring, line)
    kind = node[0]
    if kind in ("num", "name"):
        if kind == "name" and node[1] in varnames:
            return {(varnames.index(node[1]),): ring.one}
        return {(): rleaf(kind, node[1], node[2])}
    if kind == "neg":
        return {w: -c for w, c in _formal(node[1], ring, varnames, line).items()}
    if kind == "pow":
        out = {(): ring.one}
        base = _formal(node[1], ring, varnames, line)
        for _ in range(node[2]):
            out = _formal_mul(out, base, ring, line)
        return out
    a = _formal(node[1], ring, varnames, line)
    b = _formal(node[2], ring, varnames, line)
    if kind in ("add", "sub"):
        out = dict(a)
        for w, c in b.items():
            out[w] = out.get(w, ring.zero) + (c if kind == "add" else -c)
        return {w: c for w, c in out.items() if c}
    return _formal_mul(a, b, ring, line)


def _formal_mul(a, b, ring, line):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            if w1 and not _is_rational_const(ring, c2):
                raise ParseError("relation coefficients must stand left of the variables", line)
            w = w1 + w2
            out[w] = out.get(w, ring.zero) + c1 * c2
    return {w: c for w, c in out.items() if c}


def _split_maps(body, line, col0):
    """``NAME -> EXPR, NAME -> EXPR`` into ``[(name, expr_text, col)]``."""
    out, pos = [], 0
    for piece in body.split(","):
        if "->" not in piece:
            raise ParseError("expected NAME -> EXPR", line, col0 + pos + 1)
        lhs, rhs = piece.split("->", 1)
        name = lhs.strip()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"bad generator name {name!r}", line, col0 + pos + 1)
        out.append((name, rhs, col0 + pos + len(lhs) + 2))
        pos += len(piece) + 1
    return out


def _linear_inverse(ring, k, img, scalar):
    """Inverse image of generator ``k`` when ``img = a * gen_k`` with ``a`` a unit scalar."""
    gen = ring.gens[k]
    t = ring.terms(img)
    if len(t) != 1:
        return None
    (e, a), = t.items()
    if ring.terms(gen).keys() != {e} or not a:
        return None
    b = ring.base.inverse(a)
    if scalar == "conj":
        b = ring.base.conj(b)
    return ring.scalar(b) * gen


def parse_algebra(text):
    """Build a :class:`SkewPBWExtension` from algebra-file text."""
    name = ring = None
    varnames = None
    rels, sig, siginv, dlt, scal = {}, {}, {}, {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        words = body.split()
        kw = words[0]
        rest_col = indent + len(kw)
        rest = body[rest_col:]
        if kw == "algebra":
            if len(words) != 2:
                raise ParseError("expected: algebra NAME", lineno, 1)
            name = words[1]
        elif kw == "coeff":
            ring = _parse_coeff(words[1:], lineno)
        elif kw == "vars":
            if ring is None:
                raise ParseError("'coeff' must come before 'vars'", lineno, 1)
            varnames = words[1:]
            if not varnames:
                raise ParseError("no variables declared", lineno, 1)
            bad = [v for v in varnames if v == "i" or v in getattr(ring, "names", ())]
            if bad:
                raise ParseError(f"variable name clash: {bad[0]}", lineno, body.index(bad[0]) + 1)
        elif kw == "rel":
            _need(varnames, lineno)
            m = re.match(r"\s*([A-Za-z_]\w*)\s*\*?\s*([A-Za-z_]\w*)\s*=(.*)$", rest)
            if not m:
                raise ParseError("expected: rel NAME * NAME = EXPR", lineno, rest_col + 1)
            a, b = m.group(1), m.group(2)
            for v in (a, b):
                if v not in varnames:
                    raise ParseError(f"unknown variable {v!r}", lineno, body.index(v) + 1)
            j, i = varnames.index(a), varnames.index(b)
            if not j > i:
                raise ParseError(f"left variable {a} must come later than {b} in vars", lineno,
                                 body.index(a) + 1)
            if (j, i) in rels:
                raise ParseError(f"duplicate relation for {a}*{b}", lineno, 1)
            col0 = rest_col + m.start(3)
            node = _parse(m.group(3), lineno, col0)
            formal = _formal(node, ring, varnames, lineno)
            c, tail = ring.zero, {}
            for w, coef in formal.items():
                if w == (i, j):
                    c = coef
                elif len(w) == 0:
                    tail[None] = coef
                elif len(w) == 1:
                    tail[varnames[w[0]]] = coef
                else:
                    raise ParseError(f"relation term {'*'.join(varnames[k] for k in w)} is not "
                                     f"{b}*{a}, a single variable or a constant", lineno, col0 + 1)
            if not c or not ring.is_unit(c):
                raise ParseError(f"coefficient of {b}*{a} must be invertible in the coefficient ring",
                                 lineno, col0 + 1)
            rels[(j, i)] = (c, tail)
        elif kw in ("sigma", "sigmainv", "delta"):
            _need(varnames, lineno)
            m = re.match(r"\s*([A-Za-z_]\w*)\s*:(.*)$", rest)
            if not m:
                raise ParseError(f"expected: {kw} NAME : NAME -> EXPR, ...", lineno, rest_col + 1)
            v = m.group(1)
            if v not in varnames:
                raise ParseError(f"unknown variable {v!r}", lineno, body.index(v, rest_col) + 1)
            target = {"sigma": sig, "sigmainv": siginv, "delta": dlt}[kw].setdefault(v, {})
            for gname, src, col in _split_maps(m.group(2), lineno, rest_col + m.start(2)):
                if gname == "i" and kw != "delta":
                    img = parse_ring_expr(src, ring.base, lineno, col)
                    if img == ring.base.i:
                        scal[v] = scal.get(v, "id")
                    elif img == -ring.base.i:
                        scal[v] = "conj"
                    else:
                        raise ParseError("the image of i must be i or -i", lineno, col)
                    continue
                if gname not in getattr(ring, "names", ()):
                    raise ParseError(f"{gname!r} is not a generator of the coefficient ring",
                                     lineno, col)
                target[gname] = parse_ring_expr(src, ring, lineno, col)
        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno, indent + 1)
    if ring is None or varnames is None:
        raise ParseError("algebra file needs 'coeff' and 'vars' lines")
    if scal and not ring.base.has_i:
        raise ParseError("'i -> ...' needs a Gaussian coefficient field")

    sigmas, deltas = {}, {}
    gnames = getattr(ring, "names", ())
    for v in varnames:
        images = sig.get(v, {})
        scalar = scal.get(v, "id")
        inv = dict(siginv.get(v, {}))
        for k, g in enumerate(gnames):
            if g in inv:
                continue
            img = images.get(g, ring.gens[k])
            guess = _linear_inverse(ring, k, img, scalar)
            if guess is None:
                raise ParseError(f"sigma of {v}: give 'sigmainv {v} : {g} -> ...' "
                                 "(inverse not derivable)")
            inv[g] = guess
        sigmas[v] = RingEndo(ring, images, scalar, inv if gnames else None)
        if v in dlt:
            deltas[v] = RingDerivation(ring, sigmas[v], dlt[v])
    try:
        return SkewPBWExtension(ring, varnames, sigmas, deltas, rels, name=name or "A")
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _need(varnames, lineno):
    if varnames is None:
        raise ParseError("'vars' must come first", lineno, 1)


def _parse_coeff(words, lineno):
    if not words:
        raise ParseError("expected a coefficient ring", lineno, 1)
    kind = words[0]
    if kind in _FIELDS and len(words) == 1:
        return _FIELDS[kind]
    if kind == "cpoly" and len(words) >= 3 and words[1] in _FIELDS:
        return PolynomialRing(_FIELDS[words[1]], words[2:])
    if kind == "skewpoly" and len(words) == 4 and words[1] in _FIELDS and words[3] in ("id", "conj"):
        return SkewPolynomialRing(_FIELDS[words[1]], words[2], words[3])
    raise ParseError("expected: coeff Q | Qi | cpoly (Q|Qi) NAME+ | skewpoly (Q|Qi) NAME (id|conj)",
                     lineno, 1)


# -- printing ----------------------------------------------------------

def _top_level_sum(s):
    depth = 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and k > 0 and ch in "+-" and s[k - 1] == " ":
            return True
    return False


def format_elem(ring, c):
    return ring.format(c)


def _fmt_exp(names, e):
    return "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)


def format_poly(p, order=DEFAULT_ORDER):
    """Terms in descending order, e.g. ``(-2*w - 2)*x*y*z + i*x*y - w``."""
    alg = p.alg
    ring = alg.ring
    out = ""
    for e in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[e]
        mono = _fmt_exp(alg.names, e)
        cs = ring.format(c)
        if not mono:
            s = cs
        elif c == ring.one:
            s = mono
        elif c == -ring.one:
            s = "-" + mono
        elif _top_level_sum(cs):
            s = f"({cs})*{mono}"
        else:
            s = f"{cs}*{mono}"
        if not out:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out or "0"


def format_vec(v, order=DEFAULT_ORDER):
    return "[" + ", ".join(format_poly(p, order) for p in v.components) + "]"


def format_any(x, order=DEFAULT_ORDER):
    if isinstance(x, Vec):
        return format_vec(x, order)
    if isinstance(x, Poly):
        return format_poly(x, order)
    raise TypeError(type(x))
