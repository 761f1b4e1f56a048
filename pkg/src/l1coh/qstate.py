"""Reader and writer for the line-oriented ``qstate v1`` text format.

Layout::

    qstate v1
    dims 2 2 2
    pure                      # or `matrix`, or `mixed`
    amp 100 0.5773502691896258 0
    ...

``matrix`` is followed by one row per line, each holding ``2*side`` reals
(re im pairs). ``mixed`` is followed by blocks::

    component 0.5
    cut 0                     # optional for states, required for decompositions
    pure | matrix | product
    ...body...
    end

A ``product`` body lists one ``factor`` per subsystem, each followed by a
one-party ``pure`` or ``matrix`` body. ``#`` starts a comment anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .detectors import Component, Cut, Decomposition
from .errors import L1CohError
from .states import QuantumState, basis_index, make_pure, make_state

HEADER = "qstate v1"


class ParseError(L1CohError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class StateValidationError(L1CohError):
    """File parsed but describes an invalid state."""


@dataclass
class _Lines:
    items: list[tuple[int, list[str]]]
    pos: int = 0

    @classmethod
    def from_text(cls, text: str) -> "_Lines":
        items = []
        for no, raw in enumerate(text.splitlines(), start=1):
            toks = raw.split("#", 1)[0].split()
            if toks:
                items.append((no, toks))
        return cls(items)

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else (None, None)

    def take(self, what: str):
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise ParseError(f"unexpected end of file, expected {what}", last + 1)
        item = self.items[self.pos]
        self.pos += 1
        return item


def _float(tok: str, no: int) -> float:
    try:
        return float(tok)
    except ValueError:
        raise ParseError(f"expected a number, got {tok!r}", no) from None


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None


def _pure_body(lines: _Lines, dims: tuple[int, ...]) -> np.ndarray:
    psi = np.zeros(int(np.prod(dims)), dtype=complex)
    seen = False
    while True:
        no, toks = lines.peek()
        if toks is None or toks[0] != "amp":
            break
        lines.take("amp")
        if len(toks) != 4:
            raise ParseError("amp lines read `amp <digits> <re> <im>`", no)
        label = toks[1]
        if len(label) != len(dims) or not label.isdigit():
            raise ParseError(f"basis label {label!r} needs one digit per subsystem ({len(dims)})", no)
        try:
            idx = basis_index([int(c) for c in label], dims)
        except L1CohError as e:
            raise ParseError(str(e), no) from None
        psi[idx] += complex(_float(toks[2], no), _float(toks[3], no))
        seen = True
    if not seen:
        no, _ = lines.peek()
        raise ParseError("pure body has no amp lines", no)
    return psi


def _matrix_body(lines: _Lines, dims: tuple[int, ...]) -> np.ndarray:
    side = int(np.prod(dims))
    m = np.zeros((side, side), dtype=complex)
    for r in range(side):
        no, toks = lines.take(f"matrix row {r}")
        if len(toks) != 2 * side:
            raise ParseError(f"matrix row needs {2 * side} numbers (re im pairs), got {len(toks)}", no)
        vals = [_float(t, no) for t in toks]
        m[r] = np.array(vals[0::2]) + 1j * np.array(vals[1::2])
    return m


def _body(lines: _Lines, dims, *, allow_product: bool):
    """Returns ``(kind, payload, line)``; payload is a vector, matrix or factor list."""
    no, toks = lines.take("pure, matrix or product")
    kind = toks[0]
    if kind == "pure":
        return kind, _pure_body(lines, dims), no
    if kind == "matrix":
        return kind, _matrix_body(lines, dims), no
    if kind == "product" and allow_product:
        factors = []
        for d in dims:
            fno, ftoks = lines.take("factor")
            if ftoks != ["factor"]:
                raise ParseError(f"expected `factor`, got {' '.join(ftoks)!r}", fno)
            fkind, payload, bno = _body(lines, (d,), allow_product=False)
            factors.append(_to_state(fkind, payload, (d,), bno))
        return kind, factors, no
    raise ParseError(f"unknown body kind {kind!r}", no)


def _to_state(kind, payload, dims, no) -> QuantumState:
    try:
        if kind == "pure":
            return make_pure(payload, dims)
        return make_state(payload, dims)
    except L1CohError as e:
        raise StateValidationError(f"line {no}: {e}") from None


def _parse(text: str):
    lines = _Lines.from_text(text)
    no, toks = lines.take("header")
    if " ".join(toks) != HEADER:
        raise ParseError(f"first line must be `{HEADER}`", no)
    no, toks = lines.take("dims")
    if toks[0] != "dims" or len(toks) < 2:
        raise ParseError("second line must be `dims d1 d2 ...`", no)
    dims = tuple(_int(t, no) for t in toks[1:])
    if any(d < 2 for d in dims):
        raise ParseError("local dimensions must be >= 2", no)
    side = int(np.prod(dims))
    if side > 256:
        raise ParseError(f"total dimension {side} exceeds 256", no)

    no, toks = lines.peek()
    if toks is None:
        raise ParseError("missing body", no)
    if toks[0] == "mixed":
        lines.take("mixed")
        comps = []
        while lines.peek()[1] is not None:
            cno, ctoks = lines.take("component")
            if ctoks[0] != "component" or len(ctoks) != 2:
                raise ParseError("expected `component <weight>`", cno)
            weight = _float(ctoks[1], cno)
            cut = None
            body = None
            while True:
                bno, btoks = lines.peek()
                if btoks is None:
                    raise ParseError("component block not closed with `end`", bno)
                if btoks[0] == "end":
                    lines.take("end")
                    break
                if btoks[0] == "cut":
                    lines.take("cut")
                    if len(btoks) != 2:
                        raise ParseError("expected `cut <solo-index>`", bno)
                    cut = _int(btoks[1], bno)
                    if not 0 <= cut < len(dims):
                        raise ParseError(f"cut index {cut} out of range", bno)
                    continue
                if body is not None:
                    raise ParseError("component has more than one body", bno)
                body = _body(lines, dims, allow_product=True)
            if body is None:
                raise ParseError("component has no body", cno)
            comps.append((weight, cut, body, cno))
        if not comps:
            raise ParseError("mixed body has no components", no)
        return dims, comps
    kind, payload, bno = _body(lines, dims, allow_product=False)
    rest_no, rest = lines.peek()
    if rest is not None:
        raise ParseError(f"unexpected trailing content {' '.join(rest)!r}", rest_no)
    return dims, (kind, payload, bno)


def _components(dims, raw) -> list[Component]:
    out = []
    for weight, cut, (kind, payload, bno), cno in raw:
        try:
            if kind == "product":
                out.append(Component.product(weight, payload, None if cut is None else Cut(cut, len(dims))))
            else:
                out.append(Component(weight, _to_state(kind, payload, dims, bno), cut))
        except StateValidationError:
            raise
        except L1CohError as e:
            raise StateValidationError(f"line {cno}: {e}") from None
    return out


def parse_decomposition(text: str, *, require_cuts: bool = True) -> Decomposition:
    """Parse a ``mixed`` document into a :class:`Decomposition`.

    Components that are not ``product`` blocks must carry a ``cut`` tag
    unless ``require_cuts`` is False.
    """
    dims, raw = _parse(text)
    if not isinstance(raw, list):
        raise ParseError("decomposition files must use a `mixed` body", 3)
    if require_cuts:
        for weight, cut, (kind, _, _), cno in raw:
            if cut is None and kind != "product":
                raise ParseError("decomposition component needs a `cut` tag", cno)
    try:
        return Decomposition(tuple(_components(dims, raw)))
    except StateValidationError:
        raise
    except L1CohError as e:
        raise StateValidationError(str(e)) from None


def parse_state(text: str) -> QuantumState:
    """Parse any ``qstate v1`` document into a single density matrix."""
    dims, raw = _parse(text)
    if isinstance(raw, list):
        return parse_decomposition(text, require_cuts=False).state
    kind, payload, bno = raw
    return _to_state(kind, payload, dims, bno)


def load_state(path) -> QuantumState:
    return parse_state(Path(path).read_text())


def load_decomposition(path, *, require_cuts: bool = True) -> Decomposition:
    return parse_decomposition(Path(path).read_text(), require_cuts=require_cuts)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _matrix_lines(m: np.ndarray) -> list[str]:
    return [" ".join(f"{_fmt(z.real)} {_fmt(z.imag)}" for z in row) for row in m]


def format_state(s: QuantumState) -> str:
    """Serialise ``s`` as a ``matrix`` document with 17 significant digits."""
    lines = [HEADER, "dims " + " ".join(map(str, s.dims)), "matrix"]
    lines += _matrix_lines(s.matrix)
    return "\n".join(lines) + "\n"


def format_pure(amplitudes, dims) -> str:
    dims = tuple(dims)
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    lines = [HEADER, "dims " + " ".join(map(str, dims)), "pure"]
    for idx in np.flatnonzero(psi):
        digits = np.unravel_index(idx, dims)
        lines.append(f"amp {''.join(map(str, digits))} {_fmt(psi[idx].real)} {_fmt(psi[idx].imag)}")
    return "\n".join(lines) + "\n"


def format_decomposition(d: Decomposition) -> str:
    lines = [HEADER, "dims " + " ".join(map(str, d.dims)), "mixed"]
    for c in d.components:
        lines.append(f"component {_fmt(c.weight)}")
        if c.cut is not None:
            lines.append(f"cut {c.cut.solo}")
        if c.factors is not None:
            lines.append("product")
            for f in c.factors:
                lines.append("factor")
                lines.append("matrix")
                lines += _matrix_lines(f.matrix)
        else:
            lines.append("matrix")
            lines += _matrix_lines(c.state.matrix)
        lines.append("end")
    return "\n".join(lines) + "\n"
