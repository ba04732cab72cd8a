"""Problem-file parsing.

A problem file is line oriented; ``#`` starts a comment that runs to the
end of the line, and blank lines are ignored. The remaining lines must
match one of:

    p: <prime>
    vars: <name> [<name> ...]
    u: <poly> [, <poly>]*
    epsilon: <poly>
    ideal <NAME>: <poly> [, <poly>]*
    option <KEY> = <VALUE>

``p``, ``vars`` and ``u`` are required and may appear once each; the
lines may appear in any order. Declaring ``epsilon`` switches the file
into Gorenstein mode. Ideal names must be unique identifiers. Recognized
option keys: ``order`` (grevlex | lex), ``emax``, ``max_iter``,
``max_members`` (positive integers), ``pool`` (vars | linear |
file:PATH). Every polynomial is parsed over the declared ring; errors
carry the 1-based line number of the offending line.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .errors import ParseError, SetupError
from .groebner import DEFAULT_LIMITS, Ideal, Limits
from .ring import MonomialOrder, Polynomial, Ring

_OPTION_KEYS = ("order", "emax", "max_iter", "max_members", "pool")
_ORDERS = ("grevlex", "lex")
_POOLS = ("vars", "linear")


class Mode(enum.Enum):
    CI = "complete-intersection"
    GORENSTEIN = "gorenstein"


@dataclass(frozen=True)
class Options:
    """Typed ``option`` lines; ``None`` means not set."""

    order: str | None = None
    emax: int | None = None
    max_iter: int | None = None
    max_members: int | None = None
    pool: str | None = None

    def merged_limits(self, base: Limits | None = None) -> Limits:
        lim = base if base is not None else DEFAULT_LIMITS
        if self.max_iter is not None:
            lim = replace(lim, max_pairs=self.max_iter,
                          max_basis=self.max_iter, max_rounds=self.max_iter)
        if self.emax is not None:
            lim = replace(lim, e_max=self.emax)
        if self.max_members is not None:
            lim = replace(lim, max_members=self.max_members)
        return lim


@dataclass(frozen=True)
class ProblemFile:
    """Parsed and validated problem file."""

    p: int
    vars: tuple[str, ...]
    mode: Mode
    u: tuple[Polynomial, ...]
    epsilon: Polynomial | None
    ideals: dict[str, tuple[Polynomial, ...]]
    options: Options
    ring: Ring = field(repr=False)

    def named_ideal(self, name: str) -> Ideal:
        if name not in self.ideals:
            known = ", ".join(self.ideals) or "none declared"
            raise SetupError(f"unknown ideal {name!r} (declared: {known})")
        return Ideal(self.ring, self.ideals[name])


def _strip(line: str) -> str:
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return line.strip()


def _split_polys(ring: Ring, text: str, lineno: int) -> tuple[Polynomial, ...]:
    parts = [part.strip() for part in text.split(",")]
    if any(not part for part in parts):
        raise ParseError("empty polynomial in comma-separated list", line=lineno)
    out = []
    for part in parts:
        try:
            out.append(ring.parse(part))
        except ParseError as exc:
            raise exc.at_line(lineno)
    return tuple(out)


def _parse_int(value: str, key: str, lineno: int) -> int:
    try:
        n = int(value)
    except ValueError:
        raise ParseError(f"option {key} needs an integer, got {value!r}", line=lineno)
    if n <= 0:
        raise ParseError(f"option {key} must be positive, got {n}", line=lineno)
    return n


def parse_problem(text: str, order: MonomialOrder | None = None) -> ProblemFile:
    """Parse problem-file text; ``order`` overrides the file's option."""

    # first pass: collect raw fields with their line numbers
    p_decl = vars_decl = u_decl = eps_decl = None
    ideal_decls: dict[str, tuple[int, str]] = {}
    opt_decls: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("option"):
            rest = line[len("option"):].strip()
            if "=" not in rest:
                raise ParseError("option line needs KEY = VALUE", line=lineno)
            key, _, value = rest.partition("=")
            key, value = key.strip(), value.strip()
            if key not in _OPTION_KEYS:
                raise ParseError(
                    f"unknown option {key!r} (known: {', '.join(_OPTION_KEYS)})",
                    line=lineno)
            if key in opt_decls:
                raise ParseError(f"duplicate option {key}", line=lineno)
            if not value:
                raise ParseError(f"option {key} has no value", line=lineno)
            opt_decls[key] = (lineno, value)
            continue
        if line.startswith("ideal"):
            rest = line[len("ideal"):].strip()
            name, sep, body = rest.partition(":")
            name = name.strip()
            if not sep or not name:
                raise ParseError("ideal line needs 'ideal NAME: polys'", line=lineno)
            if not name.isidentifier():
                raise ParseError(f"bad ideal name {name!r}", line=lineno)
            if name in ideal_decls:
                raise ParseError(f"duplicate ideal {name!r}", line=lineno)
            ideal_decls[name] = (lineno, body.strip())
            continue
        key, sep, body = line.partition(":")
        key, body = key.strip(), body.strip()
        if not sep:
            raise ParseError(f"unrecognized line {line!r}", line=lineno)
        if key == "p":
            if p_decl is not None:
                raise ParseError("duplicate p declaration", line=lineno)
            p_decl = (lineno, body)
        elif key == "vars":
            if vars_decl is not None:
                raise ParseError("duplicate vars declaration", line=lineno)
            vars_decl = (lineno, body)
        elif key == "u":
            if u_decl is not None:
                raise ParseError("duplicate u declaration", line=lineno)
            u_decl = (lineno, body)
        elif key == "epsilon":
            if eps_decl is not None:
                raise ParseError("duplicate epsilon declaration", line=lineno)
            eps_decl = (lineno, body)
        else:
            raise ParseError(f"unrecognized key {key!r}", line=lineno)

    if p_decl is None:
        raise ParseError("missing required 'p:' line")
    if vars_decl is None:
        raise ParseError("missing required 'vars:' line")
    if u_decl is None:
        raise ParseError("missing required 'u:' line")

    lineno, body = p_decl
    try:
        p = int(body)
    except ValueError:
        raise ParseError(f"p must be an integer, got {body!r}", line=lineno)

    lineno, body = vars_decl
    names = tuple(body.split())
    if not names:
        raise ParseError("vars line declares no variables", line=lineno)

    opts_kw: dict[str, object] = {}
    for key, (lineno, value) in opt_decls.items():
        if key == "order":
            if value not in _ORDERS:
                raise ParseError(
                    f"option order must be one of {', '.join(_ORDERS)}", line=lineno)
            opts_kw[key] = value
        elif key == "pool":
            if value not in _POOLS and not value.startswith("file:"):
                raise ParseError(
                    "option pool must be vars, linear, or file:PATH", line=lineno)
            opts_kw[key] = value
        else:
            opts_kw[key] = _parse_int(value, key, lineno)
    options = Options(**opts_kw)

    if order is None:
        order = MonomialOrder.lex() if options.order == "lex" \
            else MonomialOrder.grevlex()
    try:
        ring = Ring(p, names, order)
    except SetupError as exc:
        # modulus complaints belong to the p line, the rest to vars
        at = p_decl[0] if "modulus" in str(exc) else vars_decl[0]
        raise ParseError(str(exc), line=at)

    lineno, body = u_decl
    u = _split_polys(ring, body, lineno)

    epsilon = None
    if eps_decl is not None:
        lineno, body = eps_decl
        if not body:
            raise ParseError("epsilon line has no polynomial", line=lineno)
        polys = _split_polys(ring, body, lineno)
        if len(polys) != 1:
            raise ParseError("epsilon must be a single polynomial", line=lineno)
        epsilon = polys[0]

    ideals: dict[str, tuple[Polynomial, ...]] = {}
    for name, (lineno, body) in ideal_decls.items():
        if not body:
            raise ParseError(f"ideal {name!r} has no generators", line=lineno)
        ideals[name] = _split_polys(ring, body, lineno)

    mode = Mode.GORENSTEIN if epsilon is not None else Mode.CI
    return ProblemFile(p=p, vars=names, mode=mode, u=u, epsilon=epsilon,
                       ideals=ideals, options=options, ring=ring)


def load_problem(path: str, order: MonomialOrder | None = None) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read problem file {path}: {exc.strerror}")
    return parse_problem(text, order)
