"""The definition-file grammar: parsing and canonical rendering.

Files are line oriented; '#' starts a comment.  An algebra file looks like

    hopf h4                      # or: bialgebra / coalgebra / object <name>
    backend vec                  # vec | super | graded <group> <bichar> | yd <group>
    field rational               # optional; rational is the only legal value
    dim 4
    basis one g x gx
    mul g g -> one 1             # repeatable, duplicate entries are summed
    unit -> one 1
    comul x -> x one 1
    counit one -> 1
    antipode x -> gx -1          # hopf files only
    grade v -> 1                 # super: 0/1, graded/yd: a group element name
    action g v -> w -1/2         # yd files only

Group and bicharacter blocks may appear in the same file:

    group c2
    elements e g
    table e g
    table g e

    bichar chi
    table 1 1
    table 1 -1

Morphism files contain `map <dom-basis> -> <cod-basis> <coeff>` lines;
unspecified columns are zero.  Basis names of tensor-product objects are
dotted pairs like `g.x`.  Coefficients are exact: integers or p/q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .category import (Backend, CatObject, FiniteGroup, Morphism,
                       SignGradedBackend, SUPER, VEC, YetterDrinfeldBackend)
from .hopf import Coalgebra, HopfAlgebra, make_bialgebra
from .linalg import Matrix


class ParseError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class LoadedAlgebra:
    kind: str                        # hopf | bialgebra | coalgebra | object
    name: str
    backend: Backend
    basis: tuple[str, ...]
    obj: CatObject
    algebra: object | None           # HopfAlgebra / BraidedBialgebra / Coalgebra / None
    groups: dict[str, FiniteGroup]

    @property
    def dim(self) -> int:
        return len(self.basis)


def parse_scalar(tok: str, line: int) -> Fraction:
    try:
        if "/" in tok:
            num, den = tok.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(line, f"bad coefficient {tok!r}")


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


_KINDS = ("hopf", "bialgebra", "coalgebra", "object")


def parse_algebra_file(text: str) -> LoadedAlgebra:
    kind = name = None
    backend_spec: list[str] | None = None
    backend_line = None
    dim = None
    basis: list[str] | None = None
    mul: list = []
    unit: list = []
    comul: list = []
    counit: list = []
    antipode: list = []
    grades: dict[str, tuple[str, int]] = {}
    actions: list = []
    groups: dict[str, dict] = {}
    bichars: dict[str, dict] = {}
    block = None                      # ("group"|"bichar", name)

    def need_basis(tok: str, line: int) -> int:
        if basis is None:
            raise ParseError(line, "basis must be declared before entries")
        try:
            return basis.index(tok)
        except ValueError:
            raise ParseError(line, f"undeclared basis name {tok!r}")

    def split_arrow(toks: list[str], line: int) -> tuple[list[str], list[str]]:
        if "->" not in toks:
            raise ParseError(line, "expected '->'")
        k = toks.index("->")
        return toks[:k], toks[k + 1:]

    for line, toks in _tokenize(text):
        head = toks[0]
        if head in _KINDS:
            if kind is not None:
                raise ParseError(line, "duplicate header (one definition per file)")
            if len(toks) != 2:
                raise ParseError(line, f"usage: {head} <name>")
            kind, name = head, toks[1]
            block = None
        elif head == "group":
            if len(toks) != 2:
                raise ParseError(line, "usage: group <name>")
            block = ("group", toks[1])
            groups[toks[1]] = {"elements": None, "table": [], "line": line}
        elif head == "bichar":
            if len(toks) != 2:
                raise ParseError(line, "usage: bichar <name>")
            block = ("bichar", toks[1])
            bichars[toks[1]] = {"table": [], "line": line}
        elif head == "elements":
            if block is None or block[0] != "group":
                raise ParseError(line, "'elements' outside a group block")
            groups[block[1]]["elements"] = toks[1:]
        elif head == "table":
            if block is None:
                raise ParseError(line, "'table' outside a group or bichar block")
            if block[0] == "group":
                groups[block[1]]["table"].append((line, toks[1:]))
            else:
                bichars[block[1]]["table"].append((line, toks[1:]))
        elif head == "backend":
            if backend_spec is not None:
                raise ParseError(line, "duplicate backend line")
            backend_spec, backend_line = toks[1:], line
        elif head == "field":
            if toks[1:] != ["rational"]:
                raise ParseError(line, "only 'field rational' is supported")
        elif head == "dim":
            if len(toks) != 2 or not toks[1].isdigit():
                raise ParseError(line, "usage: dim <n>")
            dim = int(toks[1])
        elif head == "basis":
            if dim is None:
                raise ParseError(line, "dim must precede basis")
            if len(toks[1:]) != dim:
                raise ParseError(line, f"expected {dim} basis names, got {len(toks[1:])}")
            if len(set(toks[1:])) != dim:
                raise ParseError(line, "duplicate basis names")
            basis = toks[1:]
        elif head == "mul":
            lhs, rhs = split_arrow(toks[1:], line)
            if len(lhs) != 2 or len(rhs) != 2:
                raise ParseError(line, "usage: mul <i> <j> -> <k> <coeff>")
            mul.append((need_basis(lhs[0], line), need_basis(lhs[1], line),
                        need_basis(rhs[0], line), parse_scalar(rhs[1], line)))
        elif head == "unit":
            lhs, rhs = split_arrow(toks[1:], line)
            if lhs or len(rhs) != 2:
                raise ParseError(line, "usage: unit -> <i> <coeff>")
            unit.append((need_basis(rhs[0], line), parse_scalar(rhs[1], line)))
        elif head == "comul":
            lhs, rhs = split_arrow(toks[1:], line)
            if len(lhs) != 1 or len(rhs) != 3:
                raise ParseError(line, "usage: comul <i> -> <j> <k> <coeff>")
            comul.append((need_basis(lhs[0], line), need_basis(rhs[0], line),
                          need_basis(rhs[1], line), parse_scalar(rhs[2], line)))
        elif head == "counit":
            lhs, rhs = split_arrow(toks[1:], line)
            if len(lhs) != 1 or len(rhs) != 1:
                raise ParseError(line, "usage: counit <i> -> <coeff>")
            counit.append((need_basis(lhs[0], line), parse_scalar(rhs[0], line)))
        elif head == "antipode":
            lhs, rhs = split_arrow(toks[1:], line)
            if len(lhs) != 1 or len(rhs) != 2:
                raise ParseError(line, "usage: antipode <i> -> <j> <coeff>")
            antipode.append((need_basis(lhs[0], line), need_basis(rhs[0], line),
                             parse_scalar(rhs[1], line)))
        elif head == "grade":
            lhs, rhs = split_arrow(toks[1:], line)
            if len(lhs) != 1 or len(rhs) != 1:
                raise ParseError(line, "usage: grade <i> -> <degree>")
            grades[lhs[0]] = (rhs[0], line)
            need_basis(lhs[0], line)
        elif head == "action":
            lhs, rhs = split_arrow(toks[1:], line)
            if len(lhs) != 2 or len(rhs) != 2:
                raise ParseError(line, "usage: action <g> <i> -> <j> <coeff>")
            actions.append((lhs[0], need_basis(lhs[1], line),
                            need_basis(rhs[0], line), parse_scalar(rhs[1], line), line))
        else:
            raise ParseError(line, f"unknown keyword {head!r}")

    if kind is None:
        raise ParseError(None, "missing header line (hopf/bialgebra/coalgebra/object)")
    if dim is None or basis is None:
        raise ParseError(None, "missing dim or basis declaration")

    built_groups = {}
    for gname, g in groups.items():
        if g["elements"] is None:
            raise ParseError(g["line"], f"group {gname} has no elements line")
        elems = g["elements"]
        if len(g["table"]) != len(elems):
            raise ParseError(g["line"], f"group {gname} needs one table row per element")
        table = []
        for tline, row in g["table"]:
            if len(row) != len(elems):
                raise ParseError(tline, "table row of wrong length")
            try:
                table.append([elems.index(t) for t in row])
            except ValueError:
                raise ParseError(tline, "table entry is not a declared element")
        try:
            built_groups[gname] = FiniteGroup.from_table(gname, elems, table)
        except ValueError as exc:
            raise ParseError(g["line"], str(exc))

    backend, group = _build_backend(backend_spec, backend_line, built_groups, bichars)
    obj = _build_object(backend, group, dim, basis, grades, actions, built_groups)
    for c in backend.object_report(obj):
        if c.status == "fail":
            raise ParseError(None, f"invalid object data: {c.name}")

    if kind == "object":
        for section, label in ((mul, "mul"), (unit, "unit"), (comul, "comul"),
                               (counit, "counit"), (antipode, "antipode")):
            if section:
                raise ParseError(None, f"object files cannot carry {label} entries")
        return LoadedAlgebra(kind, name, backend, tuple(basis), obj, None, built_groups)

    n = dim
    delta = Matrix.from_entries(n * n, n, ((j * n + k, i, v) for i, j, k, v in comul))
    eps = Matrix.from_entries(1, n, ((0, i, v) for i, v in counit))
    if kind == "coalgebra":
        for section, label in ((mul, "mul"), (unit, "unit"), (antipode, "antipode")):
            if section:
                raise ParseError(None, f"coalgebra files cannot carry {label} entries")
        unit_obj = backend.unit()
        coalg = Coalgebra(backend, obj,
                          Morphism(obj, backend.tensor(obj, obj), delta),
                          Morphism(obj, unit_obj, eps))
        return LoadedAlgebra(kind, name, backend, tuple(basis), obj, coalg, built_groups)

    m = Matrix.from_entries(n, n * n, ((k, i * n + j, v) for i, j, k, v in mul))
    u = Matrix.from_entries(n, 1, ((i, 0, v) for i, v in unit))
    if kind == "hopf":
        if not antipode:
            raise ParseError(None, "hopf files need antipode entries")
        s = Matrix.from_entries(n, n, ((j, i, v) for i, j, v in antipode))
        alg = make_bialgebra(backend, obj, m, u, delta, eps, s)
    else:
        if antipode:
            raise ParseError(None, "bialgebra files cannot carry antipode entries")
        alg = make_bialgebra(backend, obj, m, u, delta, eps)
    return LoadedAlgebra(kind, name, backend, tuple(basis), obj, alg, built_groups)


def _build_backend(spec, line, groups, bichars):
    if spec is None:
        raise ParseError(None, "missing backend line")
    kind = spec[0] if spec else ""
    if kind == "vec":
        if len(spec) != 1:
            raise ParseError(line, "usage: backend vec")
        return VEC, None
    if kind == "super":
        if len(spec) != 1:
            raise ParseError(line, "usage: backend super")
        return SUPER, None
    if kind == "graded":
        if len(spec) != 3:
            raise ParseError(line, "usage: backend graded <group> <bichar>")
        gname, bname = spec[1], spec[2]
        if gname not in groups:
            raise ParseError(line, f"unknown group {gname!r}")
        if bname not in bichars:
            raise ParseError(line, f"unknown bichar {bname!r}")
        rows = []
        for tline, row in bichars[bname]["table"]:
            try:
                rows.append([int(v) for v in row])
            except ValueError:
                raise ParseError(tline, "bichar entries must be 1 or -1")
        try:
            return SignGradedBackend.make(groups[gname], rows), groups[gname]
        except ValueError as exc:
            raise ParseError(line, str(exc))
    if kind == "yd":
        if len(spec) != 2:
            raise ParseError(line, "usage: backend yd <group>")
        gname = spec[1]
        if gname not in groups:
            raise ParseError(line, f"unknown group {gname!r}")
        return YetterDrinfeldBackend(groups[gname]), groups[gname]
    raise ParseError(line, f"unknown backend {kind!r}")


def _build_object(backend, group, dim, basis, grades, actions, groups):
    grading = None
    action = None
    if backend.kind == "vec" and grades:
        first = next(iter(grades.values()))
        raise ParseError(first[1], "grade entries need a graded backend")
    if backend.kind == "super":
        grading = []
        for b in basis:
            tok, line = grades.get(b, ("0", None))
            if tok not in ("0", "1"):
                raise ParseError(line, "super grades must be 0 or 1")
            grading.append(int(tok))
        grading = tuple(grading)
    elif backend.kind in ("graded", "yd"):
        grading = []
        for b in basis:
            tok, line = grades.get(b, (group.elements[group.identity], None))
            try:
                grading.append(group.index(tok))
            except ValueError:
                raise ParseError(line, f"unknown group element {tok!r}")
        grading = tuple(grading)
    if backend.kind == "yd":
        mats = {g: [] for g in range(len(group.elements))}
        for gtok, i, j, v, line in actions:
            try:
                gi = group.index(gtok)
            except ValueError:
                raise ParseError(line, f"unknown group element {gtok!r}")
            mats[gi].append((j, i, v))
        action = tuple(
            Matrix.from_entries(dim, dim, mats[g]) if mats[g] else Matrix.identity(dim)
            for g in range(len(group.elements)))
    elif actions:
        raise ParseError(actions[0][4], "action entries need the yd backend")
    return CatObject(dim, grading=grading, action=action)


def parse_morphism_file(text: str, dom: LoadedAlgebra | tuple, cod: LoadedAlgebra | tuple) -> Morphism:
    """Entries `map <i> -> <j> <coeff>`; unspecified columns are zero."""
    dom_obj, dom_names = _obj_names(dom)
    cod_obj, cod_names = _obj_names(cod)
    entries = []
    for line, toks in _tokenize(text):
        if toks[0] != "map":
            raise ParseError(line, f"unknown keyword {toks[0]!r} in morphism file")
        if "->" not in toks or len(toks) != 5 or toks[2] != "->":
            raise ParseError(line, "usage: map <i> -> <j> <coeff>")
        src, dst, coeff = toks[1], toks[3], parse_scalar(toks[4], line)
        try:
            j = dom_names.index(src)
        except ValueError:
            raise ParseError(line, f"unknown domain basis name {src!r}")
        try:
            i = cod_names.index(dst)
        except ValueError:
            raise ParseError(line, f"unknown codomain basis name {dst!r}")
        entries.append((i, j, coeff))
    return Morphism(dom_obj, cod_obj,
                    Matrix.from_entries(cod_obj.dim, dom_obj.dim, entries))


def _obj_names(x):
    if isinstance(x, LoadedAlgebra):
        return x.obj, list(x.basis)
    obj, names = x
    return obj, list(names)


def tensor_names(a: list[str], b: list[str]) -> list[str]:
    return [f"{x}.{y}" for x in a for y in b]


def inclusion_by_names(b: LoadedAlgebra, a: LoadedAlgebra) -> Morphism:
    """Canonical inclusion when every basis name of b occurs in a."""
    entries = []
    for j, nm in enumerate(b.basis):
        if nm not in a.basis:
            raise ParseError(None, f"basis name {nm!r} of {b.name} not found in {a.name}; "
                                   "pass an explicit morphism file")
        entries.append((a.basis.index(nm), j, 1))
    return Morphism(b.obj, a.obj, Matrix.from_entries(a.dim, b.dim, entries))


# -- canonical rendering -------------------------------------------------------

def _coeff(v: Fraction) -> str:
    return str(v)


def render_group(g: FiniteGroup) -> str:
    lines = [f"group {g.name}", "elements " + " ".join(g.elements)]
    for row in g.table:
        lines.append("table " + " ".join(g.elements[k] for k in row))
    return "\n".join(lines)


def render_algebra(loaded: LoadedAlgebra) -> str:
    """Canonical text form; sparse entries in ascending index order."""
    basis = loaded.basis
    n = loaded.dim
    lines = [f"{loaded.kind} {loaded.name}"]
    backend = loaded.backend
    if backend.kind == "vec":
        lines.append("backend vec")
    elif backend.kind == "super":
        lines.append("backend super")
    elif backend.kind == "graded":
        lines.append(f"backend graded {backend.group.name} chi")
    else:
        lines.append(f"backend yd {backend.group.name}")
    for g in loaded.groups.values():
        lines.append(render_group(g))
    if backend.kind == "graded":
        lines.append("bichar chi")
        for row in backend.bichar:
            lines.append("table " + " ".join(str(v) for v in row))
    lines.append(f"dim {n}")
    lines.append("basis " + " ".join(basis))
    obj = loaded.obj
    if obj.grading is not None:
        for i, b in enumerate(basis):
            deg = obj.grading[i]
            tok = str(deg) if backend.kind == "super" else backend.group.elements[deg]
            lines.append(f"grade {b} -> {tok}")
    if obj.action is not None:
        for g, mat in enumerate(obj.action):
            gname = backend.group.elements[g]
            for j in range(n):
                for i, v in sorted(mat.column(j).items()):
                    lines.append(f"action {gname} {basis[j]} -> {basis[i]} {_coeff(v)}")
    alg = loaded.algebra
    if alg is None:
        return "\n".join(lines) + "\n"
    if hasattr(alg, "m"):
        for col in range(n * n):
            i, j = divmod(col, n)
            for k, v in sorted(alg.m.mat.column(col).items()):
                lines.append(f"mul {basis[i]} {basis[j]} -> {basis[k]} {_coeff(v)}")
        for i, v in sorted(alg.u.mat.column(0).items()):
            lines.append(f"unit -> {basis[i]} {_coeff(v)}")
    for i in range(n):
        for jk, v in sorted(alg.delta.mat.column(i).items()):
            j, k = divmod(jk, n)
            lines.append(f"comul {basis[i]} -> {basis[j]} {basis[k]} {_coeff(v)}")
    for i in range(n):
        v = alg.eps.mat.entry(0, i)
        if v:
            lines.append(f"counit {basis[i]} -> {_coeff(v)}")
    if isinstance(alg, HopfAlgebra):
        for i in range(n):
            for j, v in sorted(alg.s.mat.column(i).items()):
                lines.append(f"antipode {basis[i]} -> {basis[j]} {_coeff(v)}")
    return "\n".join(lines) + "\n"


def render_morphism(mat: Matrix, dom_names: list[str], cod_names: list[str]) -> str:
    lines = []
    for j, nm in enumerate(dom_names):
        for i, v in sorted(mat.column(j).items()):
            lines.append(f"map {nm} -> {cod_names[i]} {_coeff(v)}")
    return "\n".join(lines) + "\n"
