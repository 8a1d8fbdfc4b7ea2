"""Plain-text file formats for groups and representations.

Both formats are line based, use 1-based points, allow blank lines and
``#`` comments, and round-trip exactly through the emit functions.
"""

from __future__ import annotations

from .errors import InputError, ParseError
from .modlinalg import MatrixP, ModuleRep
from .perm import GroupSpec, Permutation


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_group_file(text: str) -> GroupSpec:
    """Format: a ``degree N`` line, an optional ``label NAME`` line, and one
    ``perm i1 i2 ... iN`` line per generator (1-based images)."""
    degree = None
    label = ""
    generators = []
    for lineno, line in _content_lines(text):
        keyword, _, rest = line.partition(" ")
        if keyword == "degree":
            if degree is not None:
                raise ParseError("duplicate degree line", line=lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise ParseError(f"bad degree {rest!r}", line=lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", line=lineno)
        elif keyword == "label":
            label = rest.strip()
        elif keyword == "perm":
            if degree is None:
                raise ParseError("perm line before degree line", line=lineno)
            try:
                images = [int(x) for x in rest.split()]
            except ValueError:
                raise ParseError("permutation images must be integers", line=lineno) from None
            if len(images) != degree:
                raise ParseError(
                    f"expected {degree} images, got {len(images)}", line=lineno
                )
            if sorted(images) != list(range(1, degree + 1)):
                raise ParseError(
                    f"images {images} are not a bijection of 1..{degree}", line=lineno
                )
            generators.append(Permutation.from_one_based(images))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", line=lineno)
    if degree is None:
        raise ParseError("missing degree line")
    if not generators:
        raise ParseError("at least one perm line is required")
    return GroupSpec(degree=degree, generators=tuple(generators), label=label)


def emit_group_file(spec: GroupSpec) -> str:
    lines = [f"degree {spec.degree}"]
    if spec.label:
        lines.append(f"label {spec.label}")
    for g in spec.generators:
        lines.append("perm " + " ".join(map(str, g.one_based())))
    return "\n".join(lines) + "\n"


def parse_rep_file(text: str) -> ModuleRep:
    """Format: ``prime P``, ``dim D``, ``generators G`` header lines followed
    by G matrices given as D rows of D integers in [0, P)."""
    prime = dim = count = None
    rows: list[tuple[int, ...]] = []
    matrices: list[MatrixP] = []
    for lineno, line in _content_lines(text):
        head = line.split()[0]
        if head in ("prime", "dim", "generators"):
            try:
                value = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError(f"bad {head} line", line=lineno) from None
            if head == "prime":
                prime = value
            elif head == "dim":
                dim = value
            else:
                count = value
            continue
        if prime is None or dim is None or count is None:
            raise ParseError("matrix rows before complete header", line=lineno)
        try:
            row = tuple(int(x) for x in line.split())
        except ValueError:
            raise ParseError("matrix entries must be integers", line=lineno) from None
        if len(row) != dim:
            raise ParseError(f"expected {dim} entries, got {len(row)}", line=lineno)
        for x in row:
            if not 0 <= x < prime:
                raise ParseError(f"entry {x} outside 0..{prime - 1}", line=lineno)
        rows.append(row)
        if len(rows) == dim:
            try:
                matrices.append(MatrixP(prime, tuple(rows)))
            except InputError as exc:
                raise ParseError(str(exc), line=lineno) from None
            rows = []
    if prime is None or dim is None or count is None:
        raise ParseError("missing prime/dim/generators header")
    if rows:
        raise ParseError(f"incomplete final matrix ({len(rows)} of {dim} rows)")
    if len(matrices) != count:
        raise ParseError(f"expected {count} matrices, found {len(matrices)}")
    try:
        return ModuleRep(prime=prime, dim=dim, images=tuple(matrices))
    except InputError as exc:
        raise ParseError(str(exc)) from None


def emit_rep_file(rep: ModuleRep) -> str:
    lines = [f"prime {rep.prime}", f"dim {rep.dim}", f"generators {len(rep.images)}"]
    for m in rep.images:
        for row in m.rows:
            lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


__all__ = ["parse_group_file", "emit_group_file", "parse_rep_file", "emit_rep_file"]
