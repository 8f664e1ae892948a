"""Text formats for every on-disk type, with byte-exact round-trips.

  nmatrix v1 ............ field line, then `component R C` blocks
  nvector v1 ............ field line, then one line of scalars per component
  nmap v1 ............... field, `assignment ...`, `target ...`, blocks
  chain ................. an nmatrix file with `convention row|column` after
                          the field line and an optional `labels ...` line
                          after each `component` line
  model exchange|consumption ... optional `relaxed true`, then field and blocks

Lines beginning with `#` and blank lines are ignored on input.  Emission
writes the canonical form: reduced rationals with positive denominators,
integers without `/1`, shortest round-trip decimals, single spaces, one
trailing newline.  Parsing an emitted file reproduces the value, and
emitting a canonical file reproduces its bytes.
"""

from __future__ import annotations

from pathlib import Path

from .errors import (
    MalformedScalar,
    NonPrimeModulus,
    NonStrictDims,
    ParseError,
    ShapeError,
    ShapeMismatch,
    StrictDimsViolation,
    UnknownHeader,
)
from .fields import DEFAULT_REAL_TOLERANCE, FieldDescriptor
from .leontief import ConsumptionNMatrix, ExchangeNMatrix
from .markov import Convention, MarkovNChain
from .nmatrix import NMatrix
from .nspace import NDims, NVector, NVectorSpace
from .ntransform import ComponentAssignment, NLinearMap


class _Cursor:
    def __init__(self, text: str):
        self.rows = []
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            self.rows.append((number, stripped))
        self.pos = 0
        self.last_line = 0

    def peek(self):
        if self.pos < len(self.rows):
            return self.rows[self.pos]
        return None

    def take(self, what: str):
        item = self.peek()
        if item is None:
            raise ParseError(f"unexpected end of file, expected {what}",
                             line=self.last_line or None)
        self.pos += 1
        self.last_line = item[0]
        return item

    def done(self) -> bool:
        return self.pos >= len(self.rows)


def _parse_field(cursor: _Cursor,
                 tolerance: float) -> FieldDescriptor:
    line, content = cursor.take("a field line")
    if not content.startswith("field "):
        raise UnknownHeader(f"expected a field line, got {content!r}", line=line)
    try:
        return FieldDescriptor.from_header(content[len("field "):].strip(),
                                           tolerance)
    except NonPrimeModulus as exc:
        raise MalformedScalar(str(exc), line=line) from None
    except MalformedScalar as exc:
        raise MalformedScalar(str(exc), line=line) from None


def _parse_scalars(field, tokens, line):
    out = []
    for token in tokens:
        try:
            out.append(field.parse_scalar(token))
        except MalformedScalar as exc:
            raise MalformedScalar(str(exc), line=line) from None
    return out


def _parse_component_block(cursor: _Cursor, field, with_labels: bool):
    line, content = cursor.take("a component block")
    parts = content.split()
    if parts[0] != "component" or len(parts) != 3:
        raise ShapeError(f"expected 'component R C', got {content!r}", line=line)
    try:
        rows, cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise ShapeError(f"bad component shape in {content!r}", line=line) from None
    if rows < 1 or cols < 1:
        raise ShapeError(f"component shape must be positive, got {rows}x{cols}",
                         line=line)
    labels = None
    if with_labels:
        item = cursor.peek()
        if item is not None and item[1].startswith("labels"):
            label_line, content = cursor.take("labels")
            labels = content.split()[1:]
            if len(labels) != rows:
                raise ShapeError(
                    f"expected {rows} labels, got {len(labels)}", line=label_line
                )
    grid = []
    for _ in range(rows):
        row_line, content = cursor.take("a matrix row")
        tokens = content.split()
        if len(tokens) != cols:
            raise ShapeError(
                f"expected {cols} entries, got {len(tokens)}", line=row_line
            )
        grid.append(_parse_scalars(field, tokens, row_line))
    return grid, labels


def _take_header(cursor: _Cursor, expected: str):
    line, content = cursor.take("a header")
    if content != expected:
        raise UnknownHeader(f"expected {expected!r}, got {content!r}", line=line)


def _require_done(cursor: _Cursor):
    item = cursor.peek()
    if item is not None:
        raise ParseError(f"trailing content {item[1]!r}", line=item[0])


# -- matrices and chains -------------------------------------------------------

def parse_nmatrix(text: str,
                  tolerance: float = DEFAULT_REAL_TOLERANCE) -> NMatrix:
    cursor = _Cursor(text)
    _take_header(cursor, "nmatrix v1")
    field = _parse_field(cursor, tolerance)
    blocks = []
    while not cursor.done():
        grid, _ = _parse_component_block(cursor, field, with_labels=False)
        blocks.append(grid)
    if len(blocks) < 2:
        raise ShapeError("an n-matrix file needs at least two components",
                         line=cursor.last_line)
    return NMatrix(field, blocks)


def emit_nmatrix(m: NMatrix) -> str:
    lines = ["nmatrix v1", f"field {m.field.header()}"]
    _emit_components(lines, m)
    return "\n".join(lines) + "\n"


def _emit_components(lines, m: NMatrix, labels=None):
    for index, grid in enumerate(m.components):
        rows, cols = len(grid), len(grid[0])
        lines.append(f"component {rows} {cols}")
        if labels is not None:
            group = labels[index]
            if list(group) != [str(i + 1) for i in range(rows)]:
                lines.append("labels " + " ".join(group))
        for row in grid:
            lines.append(" ".join(m.field.format_scalar(x) for x in row))


def parse_chain(text: str,
                tolerance: float = DEFAULT_REAL_TOLERANCE,
                default_convention: Convention | None = None) -> MarkovNChain:
    cursor = _Cursor(text)
    _take_header(cursor, "nmatrix v1")
    field = _parse_field(cursor, tolerance)
    convention = default_convention
    item = cursor.peek()
    if item is not None and item[1].startswith("convention"):
        line, content = cursor.take("convention")
        word = content.split()[1:]
        if word == ["row"]:
            convention = Convention.ROW
        elif word == ["column"]:
            convention = Convention.COLUMN
        else:
            raise ParseError(f"bad convention line {content!r}", line=line)
    if convention is None:
        convention = Convention.ROW
    blocks = []
    labels = []
    while not cursor.done():
        grid, group = _parse_component_block(cursor, field, with_labels=True)
        blocks.append(grid)
        labels.append(
            group if group is not None
            else [str(i + 1) for i in range(len(grid))]
        )
    if len(blocks) < 2:
        raise ShapeError("a chain file needs at least two components",
                         line=cursor.last_line)
    return MarkovNChain(NMatrix(field, blocks), convention, labels)


def emit_chain(c: MarkovNChain) -> str:
    lines = [
        "nmatrix v1",
        f"field {c.field.header()}",
        f"convention {c.convention.value}",
    ]
    _emit_components(lines, c.p, labels=c.state_labels)
    return "\n".join(lines) + "\n"


# -- vectors -----------------------------------------------------------------

def parse_nvector(text: str,
                  tolerance: float = DEFAULT_REAL_TOLERANCE,
                  strict: bool = True) -> NVector:
    cursor = _Cursor(text)
    _take_header(cursor, "nvector v1")
    field = _parse_field(cursor, tolerance)
    components = []
    while not cursor.done():
        line, content = cursor.take("a component line")
        components.append(_parse_scalars(field, content.split(), line))
    if len(components) < 2:
        raise ShapeError("an n-vector file needs at least two components",
                         line=cursor.last_line)
    try:
        dims = NDims([len(comp) for comp in components], strict=strict)
    except NonStrictDims as exc:
        raise StrictDimsViolation(str(exc)) from None
    space = NVectorSpace(field, dims)
    return NVector(space, components)


def emit_nvector(v: NVector) -> str:
    field = v.space.field
    lines = ["nvector v1", f"field {field.header()}"]
    for comp in v.components:
        lines.append(" ".join(field.format_scalar(x) for x in comp))
    return "\n".join(lines) + "\n"


# -- componentwise linear maps -------------------------------------------------

def parse_nmap(text: str,
               tolerance: float = DEFAULT_REAL_TOLERANCE,
               strict: bool = True) -> NLinearMap:
    cursor = _Cursor(text)
    _take_header(cursor, "nmap v1")
    field = _parse_field(cursor, tolerance)
    line, content = cursor.take("an assignment line")
    parts = content.split()
    if parts[0] != "assignment" or len(parts) < 2:
        raise ParseError(f"expected an assignment line, got {content!r}",
                         line=line)
    try:
        targets = [int(x) for x in parts[1:]]
    except ValueError:
        raise ParseError(f"bad assignment in {content!r}", line=line) from None
    target_dims = None
    item = cursor.peek()
    if item is not None and item[1].startswith("target"):
        line, content = cursor.take("target dims")
        try:
            target_dims = [int(x) for x in content.split()[1:]]
        except ValueError:
            raise ParseError(f"bad target dims in {content!r}", line=line) from None
    blocks = []
    while not cursor.done():
        grid, _ = _parse_component_block(cursor, field, with_labels=False)
        blocks.append(grid)
    if len(blocks) != len(targets):
        raise ShapeError(
            f"{len(targets)} assignment slots but {len(blocks)} component "
            f"matrices", line=cursor.last_line
        )
    source_dims = [len(grid[0]) for grid in blocks]
    if target_dims is None:
        count = max(targets)
        inferred: dict[int, int] = {}
        for j, grid in zip(targets, blocks):
            inferred[j] = len(grid)
        missing = [j for j in range(1, count + 1) if j not in inferred]
        if missing:
            raise ParseError(
                f"cannot infer dims of unassigned target slots {missing}; "
                f"add a 'target ...' line", line=cursor.last_line
            )
        target_dims = [inferred[j] for j in range(1, count + 1)]
    try:
        source_space = NVectorSpace(field, NDims(source_dims, strict=strict))
        target_space = NVectorSpace(field, NDims(target_dims, strict=strict))
    except NonStrictDims as exc:
        raise StrictDimsViolation(str(exc)) from None
    try:
        assignment = ComponentAssignment(
            len(source_dims), len(target_dims), targets
        )
        return NLinearMap(source_space, target_space, assignment, blocks)
    except ShapeMismatch as exc:
        raise ShapeError(str(exc)) from None


def emit_nmap(t: NLinearMap) -> str:
    field = t.source.field
    lines = [
        "nmap v1",
        f"field {field.header()}",
        "assignment " + " ".join(str(j) for j in t.assignment.map),
        "target " + " ".join(str(d) for d in t.target.dims),
    ]
    for grid in t.matrices:
        rows, cols = len(grid), len(grid[0])
        lines.append(f"component {rows} {cols}")
        for row in grid:
            lines.append(" ".join(field.format_scalar(x) for x in row))
    return "\n".join(lines) + "\n"


# -- economic models ------------------------------------------------------------

def parse_model(text: str,
                tolerance: float = DEFAULT_REAL_TOLERANCE):
    cursor = _Cursor(text)
    line, content = cursor.take("a model header")
    parts = content.split()
    if parts[0] != "model" or len(parts) != 2 or parts[1] not in (
        "exchange", "consumption"
    ):
        raise UnknownHeader(
            f"expected 'model exchange' or 'model consumption', got {content!r}",
            line=line,
        )
    relaxed = False
    item = cursor.peek()
    if item is not None and item[1].startswith("relaxed"):
        line, flag = cursor.take("relaxed flag")
        word = flag.split()[1:]
        if word == ["true"]:
            relaxed = True
        elif word == ["false"]:
            relaxed = False
        else:
            raise ParseError(f"bad relaxed line {flag!r}", line=line)
    field = _parse_field(cursor, tolerance)
    blocks = []
    while not cursor.done():
        grid, _ = _parse_component_block(cursor, field, with_labels=False)
        blocks.append(grid)
    if len(blocks) < 2:
        raise ShapeError("a model file needs at least two components",
                         line=cursor.last_line)
    matrix = NMatrix(field, blocks)
    if parts[1] == "exchange":
        return ExchangeNMatrix(matrix, relaxed)
    return ConsumptionNMatrix(matrix, relaxed)


def emit_model(model) -> str:
    if isinstance(model, ExchangeNMatrix):
        kind, matrix = "exchange", model.a
    elif isinstance(model, ConsumptionNMatrix):
        kind, matrix = "consumption", model.c
    else:
        raise TypeError(f"not a model: {model!r}")
    lines = [f"model {kind}"]
    if model.relaxed:
        lines.append("relaxed true")
    lines.append(f"field {matrix.field.header()}")
    _emit_components(lines, matrix)
    return "\n".join(lines) + "\n"


# -- dispatch ----------------------------------------------------------------------

def parse_text(text: str,
               tolerance: float = DEFAULT_REAL_TOLERANCE,
               strict: bool = True,
               default_convention: Convention | None = None):
    cursor = _Cursor(text)
    item = cursor.peek()
    if item is None:
        raise UnknownHeader("empty file")
    header = item[1].split()[0]
    if header == "nmatrix":
        has_convention = any(
            content.startswith("convention") for _, content in cursor.rows
        )
        if has_convention or default_convention is not None:
            return parse_chain(text, tolerance, default_convention)
        return parse_nmatrix(text, tolerance)
    if header == "nvector":
        return parse_nvector(text, tolerance, strict)
    if header == "nmap":
        return parse_nmap(text, tolerance, strict)
    if header == "model":
        return parse_model(text, tolerance)
    raise UnknownHeader(f"unrecognized header {item[1]!r}", line=item[0])


def parse_file(path,
               tolerance: float = DEFAULT_REAL_TOLERANCE,
               strict: bool = True,
               default_convention: Convention | None = None):
    text = Path(path).read_text(encoding="utf-8")
    return parse_text(text, tolerance, strict, default_convention)


def emit(value) -> str:
    if isinstance(value, MarkovNChain):
        return emit_chain(value)
    if isinstance(value, NMatrix):
        return emit_nmatrix(value)
    if isinstance(value, NVector):
        return emit_nvector(value)
    if isinstance(value, NLinearMap):
        return emit_nmap(value)
    if isinstance(value, (ExchangeNMatrix, ConsumptionNMatrix)):
        return emit_model(value)
    raise TypeError(f"no text format for {type(value).__name__}")
