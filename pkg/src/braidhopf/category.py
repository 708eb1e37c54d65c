"""Strict braided monoidal category backends.

Objects are finite-dimensional with an optional group grading per basis
vector and an optional group action; morphisms are exact matrices tagged
with their (co)domain objects.  Four backends realize the braiding:

* Vec          - plain vector spaces, braiding is the flip
* SuperVec     - Z/2-graded spaces, flip with sign (-1)^{|v||w|}
* SignGraded   - G-graded spaces, flip scaled by a +-1 bicharacter
* YetterDrinfeld(G) - G-graded G-representations, c(v (x) w) = (deg v . w) (x) v

Unit constraints and associators are identities throughout (the backends
are strict), so formulas are transcribed with those factors deleted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, kron, pipeline
from .report import CheckResult, bool_check, eq_check


class BackendMismatch(ValueError):
    pass


class MissingGrading(ValueError):
    pass


class MissingAction(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]   # table[i][j] = index of elements[i] * elements[j]
    identity: int
    inverses: tuple[int, ...]

    @staticmethod
    def from_table(name: str, elements: list[str], table: list[list[int]]) -> "FiniteGroup":
        n = len(elements)
        if len(set(elements)) != n:
            raise ValueError(f"group {name}: duplicate element names")
        if len(table) != n or any(len(r) != n for r in table):
            raise ValueError(f"group {name}: table must be {n}x{n}")
        for r in table:
            if any(not (0 <= v < n) for v in r):
                raise ValueError(f"group {name}: table entry out of range")
        identity = None
        for e in range(n):
            if all(table[e][j] == j and table[j][e] == j for j in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError(f"group {name}: no identity element")
        inverses = [None] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == identity and table[j][i] == identity:
                    inverses[i] = j
                    break
            if inverses[i] is None:
                raise ValueError(f"group {name}: {elements[i]} has no inverse")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise ValueError(
                            f"group {name}: associativity fails at "
                            f"({elements[i]},{elements[j]},{elements[k]})")
        return FiniteGroup(name, tuple(elements), tuple(tuple(r) for r in table),
                           identity, tuple(inverses))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inverses[h])


@dataclass(frozen=True)
class CatObject:
    dim: int
    grading: tuple[int, ...] | None = None
    action: tuple[Matrix, ...] | None = None   # one matrix per group element


@dataclass(frozen=True)
class Morphism:
    dom: CatObject
    cod: CatObject
    mat: Matrix

    def __post_init__(self):
        if self.mat.rows != self.cod.dim or self.mat.cols != self.dom.dim:
            raise BackendMismatch(
                f"matrix {self.mat.rows}x{self.mat.cols} does not fit "
                f"{self.cod.dim}x{self.dom.dim}")


def _flip(dx: int, dy: int) -> Matrix:
    return Matrix.from_entries(dx * dy, dx * dy,
                               ((j * dx + i, i * dy + j, 1) for i in range(dx) for j in range(dy)))


class Backend:
    """Common machinery; concrete backends fix grading/action semantics."""

    kind = "abstract"

    def unit(self) -> CatObject:
        raise NotImplementedError

    def tensor(self, x: CatObject, y: CatObject) -> CatObject:
        raise NotImplementedError

    def braiding_mat(self, x: CatObject, y: CatObject) -> Matrix:
        raise NotImplementedError

    def braiding_inv_mat(self, x: CatObject, y: CatObject) -> Matrix:
        raise NotImplementedError

    def braiding(self, x: CatObject, y: CatObject) -> Morphism:
        return Morphism(self.tensor(x, y), self.tensor(y, x), self.braiding_mat(x, y))

    def braiding_inv(self, x: CatObject, y: CatObject) -> Morphism:
        return Morphism(self.tensor(y, x), self.tensor(x, y), self.braiding_inv_mat(x, y))

    def object_report(self, x: CatObject) -> list[CheckResult]:
        return []

    def morphism_report(self, f: Morphism) -> list[CheckResult]:
        return [CheckResult("morphism_shape", "pass")]

    def check_object(self, x: CatObject) -> None:
        for c in self.object_report(x):
            if c.status == "fail":
                raise BackendMismatch(f"invalid object: {c.name} ({c.witness})")


@dataclass(frozen=True)
class VecBackend(Backend):
    kind = "vec"

    def unit(self) -> CatObject:
        return CatObject(1)

    def tensor(self, x: CatObject, y: CatObject) -> CatObject:
        return CatObject(x.dim * y.dim)

    def braiding_mat(self, x: CatObject, y: CatObject) -> Matrix:
        return _flip(x.dim, y.dim)

    def braiding_inv_mat(self, x: CatObject, y: CatObject) -> Matrix:
        return _flip(y.dim, x.dim)


def _require_grading(x: CatObject) -> tuple[int, ...]:
    if x.grading is None:
        raise MissingGrading("backend requires a grading on every object")
    return x.grading


class _GradedBackend(Backend):
    """Shared grade bookkeeping for the sign-graded style backends."""

    def _grade_mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _grade_ok(self, g: int) -> bool:
        raise NotImplementedError

    def object_report(self, x: CatObject) -> list[CheckResult]:
        grading = _require_grading(x)
        ok = len(grading) == x.dim and all(self._grade_ok(g) for g in grading)
        return [bool_check("grading_wellformed", ok)]

    def tensor(self, x: CatObject, y: CatObject) -> CatObject:
        gx, gy = _require_grading(x), _require_grading(y)
        grading = tuple(self._grade_mul(a, b) for a in gx for b in gy)
        return CatObject(x.dim * y.dim, grading=grading)

    def morphism_report(self, f: Morphism) -> list[CheckResult]:
        gd, gc = _require_grading(f.dom), _require_grading(f.cod)
        bad = None
        for j in range(f.mat.cols):
            for i in sorted(f.mat.column(j)):
                if gc[i] != gd[j]:
                    bad = (i, j)
                    break
            if bad:
                break
        if bad is None:
            return [CheckResult("grade_preserving", "pass")]
        i, j = bad
        return [CheckResult("grade_preserving", "fail",
                            witness=f"({i},{j}):lhs={f.mat.entry(i, j)}:rhs=0")]


@dataclass(frozen=True)
class SuperVecBackend(_GradedBackend):
    kind = "super"

    def unit(self) -> CatObject:
        return CatObject(1, grading=(0,))

    def _grade_mul(self, a: int, b: int) -> int:
        return (a + b) % 2

    def _grade_ok(self, g: int) -> bool:
        return g in (0, 1)

    def braiding_mat(self, x: CatObject, y: CatObject) -> Matrix:
        gx, gy = _require_grading(x), _require_grading(y)
        return Matrix.from_entries(
            x.dim * y.dim, x.dim * y.dim,
            ((j * x.dim + i, i * y.dim + j, -1 if gx[i] and gy[j] else 1)
             for i in range(x.dim) for j in range(y.dim)))

    def braiding_inv_mat(self, x: CatObject, y: CatObject) -> Matrix:
        gx, gy = _require_grading(x), _require_grading(y)
        return Matrix.from_entries(
            x.dim * y.dim, y.dim * x.dim,
            ((i * y.dim + j, j * x.dim + i, -1 if gx[i] and gy[j] else 1)
             for i in range(x.dim) for j in range(y.dim)))


@dataclass(frozen=True)
class SignGradedBackend(_GradedBackend):
    """Grading over an arbitrary finite group with a +-1 bicharacter."""

    group: FiniteGroup
    bichar: tuple[tuple[int, ...], ...]   # values in {1,-1}, indexed by element

    kind = "graded"

    @staticmethod
    def make(group: FiniteGroup, bichar_rows: list[list[int]]) -> "SignGradedBackend":
        g = group
        n = len(g.elements)
        if len(bichar_rows) != n:
            raise ValueError("bicharacter must have one row per element")
        for row in bichar_rows:
            if len(row) != n or any(v not in (1, -1) for v in row):
                raise ValueError("bicharacter must be an n x n table of +-1")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if bichar_rows[g.mul(a, b)][c] != bichar_rows[a][c] * bichar_rows[b][c]:
                        raise ValueError("bicharacter not multiplicative on the left")
                    if bichar_rows[a][g.mul(b, c)] != bichar_rows[a][b] * bichar_rows[a][c]:
                        raise ValueError("bicharacter not multiplicative on the right")
        return SignGradedBackend(group, tuple(tuple(r) for r in bichar_rows))

    def unit(self) -> CatObject:
        return CatObject(1, grading=(self.group.identity,))

    def _grade_mul(self, a: int, b: int) -> int:
        return self.group.mul(a, b)

    def _grade_ok(self, g: int) -> bool:
        return 0 <= g < len(self.group.elements)

    def braiding_mat(self, x: CatObject, y: CatObject) -> Matrix:
        gx, gy = _require_grading(x), _require_grading(y)
        return Matrix.from_entries(
            x.dim * y.dim, x.dim * y.dim,
            ((j * x.dim + i, i * y.dim + j, self.bichar[gx[i]][gy[j]])
             for i in range(x.dim) for j in range(y.dim)))

    def braiding_inv_mat(self, x: CatObject, y: CatObject) -> Matrix:
        gx, gy = _require_grading(x), _require_grading(y)
        return Matrix.from_entries(
            x.dim * y.dim, y.dim * x.dim,
            ((i * y.dim + j, j * x.dim + i, self.bichar[gx[i]][gy[j]])
             for i in range(x.dim) for j in range(y.dim)))


def _require_action(x: CatObject) -> tuple[Matrix, ...]:
    if x.action is None:
        raise MissingAction("backend requires a group action on every object")
    return x.action


@dataclass(frozen=True)
class YetterDrinfeldBackend(Backend):
    """G-graded G-representations with h . V_g inside V_{h g h^-1}."""

    group: FiniteGroup

    kind = "yd"

    def unit(self) -> CatObject:
        return CatObject(1, grading=(self.group.identity,),
                         action=tuple(Matrix.identity(1) for _ in self.group.elements))

    def tensor(self, x: CatObject, y: CatObject) -> CatObject:
        gx, gy = _require_grading(x), _require_grading(y)
        ax, ay = _require_action(x), _require_action(y)
        grading = tuple(self.group.mul(a, b) for a in gx for b in gy)
        action = tuple(kron(ax[g], ay[g]) for g in range(len(self.group.elements)))
        return CatObject(x.dim * y.dim, grading=grading, action=action)

    def object_report(self, x: CatObject) -> list[CheckResult]:
        g = self.group
        n = len(g.elements)
        grading = _require_grading(x)
        action = _require_action(x)
        checks = [bool_check("grading_wellformed",
                             len(grading) == x.dim and all(0 <= d < n for d in grading))]
        checks.append(eq_check("action_identity", action[g.identity], Matrix.identity(x.dim)))
        hom_ok = all(action[a] * action[b] == action[g.mul(a, b)]
                     for a in range(n) for b in range(n))
        checks.append(bool_check("action_homomorphism", hom_ok))
        yd_ok = True
        for h in range(n):
            for j in range(x.dim):
                target = g.conjugate(h, grading[j])
                for i in action[h].column(j):
                    if grading[i] != target:
                        yd_ok = False
        checks.append(bool_check("yetter_drinfeld_compatibility", yd_ok))
        return checks

    def braiding_mat(self, x: CatObject, y: CatObject) -> Matrix:
        grading = _require_grading(x)
        ay = _require_action(y)
        entries = []
        for i in range(x.dim):
            act = ay[grading[i]]
            for j in range(y.dim):
                for k, v in act.column(j).items():
                    entries.append((k * x.dim + i, i * y.dim + j, v))
        return Matrix.from_entries(x.dim * y.dim, x.dim * y.dim, entries)

    def braiding_inv_mat(self, x: CatObject, y: CatObject) -> Matrix:
        grading = _require_grading(x)
        ay = _require_action(y)
        inv = self.group.inverses
        entries = []
        for i in range(x.dim):
            act = ay[inv[grading[i]]]
            for j in range(y.dim):
                for k, v in act.column(j).items():
                    entries.append((i * y.dim + k, j * x.dim + i, v))
        return Matrix.from_entries(x.dim * y.dim, y.dim * x.dim, entries)

    def morphism_report(self, f: Morphism) -> list[CheckResult]:
        gd, gc = _require_grading(f.dom), _require_grading(f.cod)
        ad, ac = _require_action(f.dom), _require_action(f.cod)
        bad = None
        for j in range(f.mat.cols):
            for i in sorted(f.mat.column(j)):
                if gc[i] != gd[j]:
                    bad = (i, j)
                    break
            if bad:
                break
        checks = []
        if bad is None:
            checks.append(CheckResult("grade_preserving", "pass"))
        else:
            i, j = bad
            checks.append(CheckResult("grade_preserving", "fail",
                                      witness=f"({i},{j}):lhs={f.mat.entry(i, j)}:rhs=0"))
        for g in range(len(self.group.elements)):
            if f.mat * ad[g] != ac[g] * f.mat:
                checks.append(CheckResult(
                    "equivariance", "fail",
                    witness=f"element={self.group.elements[g]}"))
                break
        else:
            checks.append(CheckResult("equivariance", "pass"))
        return checks


VEC = VecBackend()
SUPER = SuperVecBackend()


def tensor_obj(backend: Backend, x: CatObject, y: CatObject) -> CatObject:
    return backend.tensor(x, y)


def verify_morphism(backend: Backend, f: Morphism) -> list[CheckResult]:
    return backend.morphism_report(f)


def verify_braiding_axioms(backend: Backend, x: CatObject, y: CatObject, z: CatObject,
                           sample_morphisms: list[tuple[Morphism, Morphism]] = ()) -> list[CheckResult]:
    """Hexagons on (x, y, z), invertibility, and naturality on given pairs."""
    xy = backend.tensor(x, y)
    yz = backend.tensor(y, z)
    c_xy_z = backend.braiding_mat(xy, z)
    c_x_yz = backend.braiding_mat(x, yz)
    c_xz = backend.braiding_mat(x, z)
    c_yz = backend.braiding_mat(y, z)
    c_xy = backend.braiding_mat(x, y)
    idx = Matrix.identity(x.dim)
    idy = Matrix.identity(y.dim)
    idz = Matrix.identity(z.dim)
    checks = [
        eq_check("hexagon_first", c_xy_z, pipeline((idx, c_yz), (c_xz, idy))),
        eq_check("hexagon_second", c_x_yz, pipeline((c_xy, idz), (idy, c_xz))),
        eq_check("braiding_right_inverse",
                 backend.braiding_mat(x, y) * backend.braiding_inv_mat(x, y),
                 Matrix.identity(x.dim * y.dim)),
        eq_check("braiding_left_inverse",
                 backend.braiding_inv_mat(x, y) * backend.braiding_mat(x, y),
                 Matrix.identity(x.dim * y.dim)),
    ]
    for k, (f, g) in enumerate(sample_morphisms):
        lhs = backend.braiding_mat(f.cod, g.cod) * kron(f.mat, g.mat)
        rhs = kron(g.mat, f.mat) * backend.braiding_mat(f.dom, g.dom)
        checks.append(eq_check(f"naturality_{k}", lhs, rhs))
    return checks
