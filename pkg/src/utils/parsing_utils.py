"""
Utility functions for reading and writing monomial ideals as text.

Textual form: comma-separated monomials in parentheses, e.g. "(x1^2, x2^3)";
a monomial is a product such as "x1^2*x3" (exponent 1 may be omitted, "1"
is the unit monomial). Structural form: {"n": 2, "gens": [[2, 0], [0, 3]]}.
"""

import json
import re
from typing import Dict, List, Optional, Sequence, Tuple

from errors import BSRootsError, ParseError
from monomial_core import Monomial, MonomialIdeal

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_]\w*)|(?P<number>\d+)|(?P<symbol>[(),*^]))")
_INDEXED = re.compile(r"x(\d+)")

Token = Tuple[str, str, int]


def split_vars(spec: Optional[str]) -> Optional[List[str]]:
    """Variable names from a comma-separated declaration such as "x,y,z"."""
    if spec is None:
        return None
    names = [name.strip() for name in spec.split(",") if name.strip()]
    if not names:
        raise ParseError("empty variable declaration", 0)
    for name in names:
        if not re.fullmatch(r"[A-Za-z_]\w*", name):
            raise ParseError(f"invalid variable name {name!r}", spec.find(name))
    if len(set(names)) != len(names):
        raise ParseError("repeated variable name", 0)
    return names


def _tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while text[pos:].strip():
        match = _TOKEN.match(text, pos)
        if match is None:
            bad = len(text) - len(text[pos:].lstrip())
            if text[bad] == "-" and tokens and tokens[-1][1] == "^":
                raise ParseError("negative exponent", bad)
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _IdealParser:
    """Recursive-descent parser over the token list."""

    def __init__(self, text: str, names: Optional[Sequence[str]]):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0
        self.names = list(names) if names is not None else None

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _take(self) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.index += 1
        return token

    def _expect(self, symbol: str) -> None:
        kind, value, pos = self._take()
        if kind != "symbol" or value != symbol:
            raise ParseError(f"expected {symbol!r}, found {value!r}", pos)

    def _variable(self, name: str, pos: int) -> int:
        if self.names is not None:
            if name not in self.names:
                raise ParseError(f"unknown variable {name!r}", pos)
            return self.names.index(name)
        match = _INDEXED.fullmatch(name)
        if match is None or int(match.group(1)) < 1:
            raise ParseError(f"variables are x1, x2, ... (got {name!r}); declare others with --vars", pos)
        return int(match.group(1)) - 1

    def _exponent(self) -> int:
        token = self._peek()
        if token is None or token[0] != "symbol" or token[1] != "^":
            return 1
        self.index += 1
        kind, value, pos = self._take()
        if kind != "number":
            raise ParseError(f"expected an exponent, found {value!r}", pos)
        return int(value)

    def _monomial(self) -> Dict[int, int]:
        exponents: Dict[int, int] = {}
        while True:
            kind, value, pos = self._take()
            if kind == "number":
                if value != "1":
                    raise ParseError(f"coefficient {value} in a monomial", pos)
            elif kind == "name":
                var = self._variable(value, pos)
                exponents[var] = exponents.get(var, 0) + self._exponent()
            else:
                raise ParseError(f"expected a monomial, found {value!r}", pos)
            token = self._peek()
            if token is None or token[1] != "*":
                return exponents
            self.index += 1

    def parse(self) -> MonomialIdeal:
        if not self.tokens:
            raise ParseError("empty input", 0)
        wrapped = self.tokens[0][1] == "("
        if wrapped:
            self.index += 1
        monomials = []
        token = self._peek()
        if not (wrapped and token is not None and token[1] == ")"):
            monomials.append(self._monomial())
            while self._peek() is not None and self._peek()[1] == ",":
                self.index += 1
                monomials.append(self._monomial())
        if wrapped:
            self._expect(")")
        token = self._peek()
        if token is not None:
            raise ParseError(f"trailing input {token[1]!r}", token[2])

        if self.names is not None:
            n = len(self.names)
        else:
            n = max((var + 1 for mono in monomials for var in mono), default=0)
            if n == 0:
                if not monomials:
                    raise ParseError("cannot infer the number of variables of the zero ideal", 0)
                n = 1
        return MonomialIdeal(n, [
            tuple(mono.get(i, 0) for i in range(n)) for mono in monomials
        ])


def _parse_json(text: str) -> MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.pos) from e
    if not isinstance(data, dict) or "n" not in data or "gens" not in data:
        raise ParseError('JSON ideal needs the keys "n" and "gens"', 0)
    try:
        return MonomialIdeal(data["n"], data["gens"])
    except TypeError as e:
        raise ParseError(f"malformed generators: {e}", 0) from e
    except BSRootsError as e:
        raise ParseError(str(e), 0) from e


def parse_ideal(text: str, names: Optional[Sequence[str]] = None) -> MonomialIdeal:
    """
    Parse an ideal in textual or JSON form.

    Args:
        text: Input text
        names: Declared variable names; default x1..xn with n the highest index used

    Returns:
        The minimalized ideal

    Raises:
        ParseError: on malformed input, with the offending position
    """
    if not text or not text.strip():
        raise ParseError("empty input", 0)
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _IdealParser(text, names).parse()


def parse_ideals(texts: Sequence[str], names: Optional[Sequence[str]] = None) -> List[MonomialIdeal]:
    """
    Parse several ideals that live in one polynomial ring.

    Without declared names each textual ideal infers n from its own highest
    index, so they are padded with zero exponents up to the largest n among
    them. JSON ideals keep the n they state.
    """
    ideals = [parse_ideal(text, names) for text in texts]
    if names is not None:
        return ideals
    n = max(ideal.ambient_dim for ideal in ideals)
    padded = []
    for text, ideal in zip(texts, ideals):
        if ideal.ambient_dim < n and not text.lstrip().startswith("{"):
            extra = (0,) * (n - ideal.ambient_dim)
            ideal = MonomialIdeal(n, [g + extra for g in ideal.generators])
        padded.append(ideal)
    return padded


def render_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    factors = []
    for i, exponent in enumerate(m):
        if exponent == 0:
            continue
        name = names[i] if names is not None else f"x{i + 1}"
        factors.append(name if exponent == 1 else f"{name}^{exponent}")
    return "*".join(factors) or "1"


def render_ideal(ideal: MonomialIdeal, names: Optional[Sequence[str]] = None) -> str:
    return "(" + ", ".join(render_monomial(g, names) for g in ideal.generators) + ")"
