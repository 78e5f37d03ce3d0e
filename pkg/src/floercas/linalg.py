"""Dense exact linear algebra over Q(i): rank, kernel, solving, and
characteristic polynomials.

Dimensions in this package stay below ~70, so dense storage and cubic
elimination are fine.  Characteristic polynomials use the Samuelson-
Berkowitz scheme, which needs no divisions at all; everything else is
plain Gauss-Jordan over the exact field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import GR_ONE, GR_ZERO, GaussianRational


class Matrix:
    """Immutable dense matrix with GaussianRational entries, row-major."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -----------------------------------------------------
    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix([[GR_ZERO] * ncols for _ in range(nrows)])

    @staticmethod
    def from_columns(cols) -> "Matrix":
        cols = list(cols)
        if not cols:
            return Matrix([])
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    def column(self, j: int) -> list:
        return [self.rows[i][j] for i in range(self.nrows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = GaussianRational.coerce(c)
        return Matrix([[a * c for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.ncols
        out = []
        for i in range(self.nrows):
            row = []
            ri = self.rows[i]
            for j in range(cols):
                s = GR_ZERO
                for k in range(self.ncols):
                    a = ri[k]
                    if a:
                        s = s + a * other.rows[k][j]
                row.append(s)
            out.append(row)
        return Matrix(out)

    def matvec(self, v) -> list:
        if self.ncols != len(v):
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.nrows):
            s = GR_ZERO
            for k, a in enumerate(self.rows[i]):
                if a and v[k]:
                    s = s + a * v[k]
            out.append(s)
        return out

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def commutes_with(self, other: "Matrix") -> bool:
        return self @ other == other @ self

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"

    # -- elimination ---------------------------------------------------------
    def rref(self):
        """Reduced row echelon form; returns (rows, pivot column list)."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        pr = 0
        for pc in range(self.ncols):
            pivot = None
            for i in range(pr, self.nrows):
                if rows[i][pc]:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[pr], rows[pivot] = rows[pivot], rows[pr]
            inv = rows[pr][pc].inv()
            rows[pr] = [x * inv for x in rows[pr]]
            for i in range(self.nrows):
                if i != pr and rows[i][pc]:
                    f = rows[i][pc]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.nrows:
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list:
        """Deterministic basis of the right kernel (free columns in order)."""
        rows, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [GR_ZERO] * self.ncols
            v[f] = GR_ONE
            for i, pc in enumerate(pivots):
                v[pc] = -rows[i][f]
            basis.append(v)
        return basis

    def solve(self, b: list) -> list:
        """One exact solution of self @ x = b; raises on inconsistency."""
        aug = Matrix([list(r) + [bb] for r, bb in zip(self.rows, b)])
        rows, pivots = aug.rref()
        if self.ncols in pivots:
            raise ValueError("inconsistent linear system")
        x = [GR_ZERO] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = rows[i][self.ncols]
        return x

    # -- characteristic polynomial ---------------------------------------
    def charpoly(self) -> "UniPoly":
        """Monic characteristic polynomial det(x*I - A), Berkowitz scheme."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        if n == 0:
            return UniPoly([GR_ONE])
        a = self.rows
        # poly coefficients, highest power first; start with x - a00
        poly = [GR_ONE, -a[0][0]]
        for i in range(1, n):
            # vector V of length i+2 driving the Toeplitz multiplication
            row = a[i][:i]
            col = [a[k][i] for k in range(i)]
            v = [GR_ONE, -a[i][i]]
            cur = col
            for _ in range(i):
                dot = GR_ZERO
                for x, y in zip(row, cur):
                    if x and y:
                        dot = dot + x * y
                v.append(-dot)
                nxt = [GR_ZERO] * i
                for r_ in range(i):
                    s = GR_ZERO
                    ar = a[r_]
                    for c_ in range(i):
                        if ar[c_] and cur[c_]:
                            s = s + ar[c_] * cur[c_]
                    nxt[r_] = s
                cur = nxt
            new = [GR_ZERO] * (i + 2)
            for j in range(i + 2):
                s = GR_ZERO
                for k in range(min(j, i + 1) + 1):
                    if k < len(v) and j - k < len(poly):
                        if v[k] and poly[j - k]:
                            s = s + v[k] * poly[j - k]
                new[j] = s
            poly = new
        return UniPoly(list(reversed(poly)))

    # -- serialization ------------------------------------------------------
    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.rows]


def kernel_rank(m: Matrix):
    """(rank, kernel basis) of an exact matrix."""
    rows, pivots = m.rref()
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [GR_ZERO] * m.ncols
        v[f] = GR_ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
    return len(pivots), basis


class UniPoly:
    """Univariate polynomial over Q(i), coefficients ascending in degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [GaussianRational.coerce(c) for c in coeffs]
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            coeffs = [GR_ZERO]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == GR_ONE

    def is_one(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == GR_ONE

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x) -> GaussianRational:
        x = GaussianRational.coerce(x)
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def synthetic_division(self, root):
        """Divide by (x - root); returns (quotient, remainder scalar)."""
        root = GaussianRational.coerce(root)
        rev = list(reversed(self.coeffs))
        out = [rev[0]]
        for c in rev[1:]:
            out.append(c + out[-1] * root)
        rem = out.pop()
        return UniPoly(list(reversed(out))), rem

    @staticmethod
    def from_roots(roots) -> "UniPoly":
        p = UniPoly([GR_ONE])
        for r in roots:
            p = p * UniPoly([-GaussianRational.coerce(r), GR_ONE])
        return p

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c)
            if k == 0:
                parts.append(cs)
                continue
            xk = "x" if k == 1 else f"x^{k}"
            if cs == "1":
                parts.append(xk)
            elif cs == "-1":
                parts.append(f"-{xk}")
            elif ("+" in cs[1:]) or ("-" in cs[1:]):
                parts.append(f"({cs})*{xk}")
            else:
                parts.append(f"{cs}*{xk}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self.coeffs]}


@dataclass(frozen=True)
class EigenReport:
    """Roots found among the candidates, with whatever is left unfactored.

    The product of (x - root)^mult over all roots times `remainder` equals
    the characteristic polynomial exactly.  remainder == 1 means the
    candidate set explained the whole spectrum; anything else is surfaced
    to the caller as a falsification signal, not an error.
    """

    roots: tuple
    remainder: UniPoly

    def complete(self) -> bool:
        return self.remainder.is_one()

    def root_set(self) -> dict:
        return {r: m for r, m in self.roots}

    def to_json(self) -> dict:
        return {
            "roots": [{"value": r.to_json(), "mult": m} for r, m in self.roots],
            "remainder": self.remainder.to_json(),
        }


def factor_over_candidates(cp: UniPoly, candidates) -> EigenReport:
    """Strip linear factors (x - c) for each candidate c, in order."""
    if not cp.is_monic():
        raise ValueError("characteristic polynomial must be monic")
    roots = []
    rem = cp
    for cand in candidates:
        cand = GaussianRational.coerce(cand)
        mult = 0
        while rem.degree > 0 and not rem.evaluate(cand):
            rem, _ = rem.synthetic_division(cand)
            mult += 1
        if mult:
            roots.append((cand, mult))
    return EigenReport(tuple(roots), rem)


def default_candidates(bound: int) -> list:
    """Candidate eigenvalues 0, +-8 and +-4k, +-4k*i for k <= bound."""
    out = [GaussianRational(0), GaussianRational(8), GaussianRational(-8)]
    for k in range(1, bound + 1):
        for val in (
            GaussianRational(4 * k),
            GaussianRational(-4 * k),
            GaussianRational(0, 4 * k),
            GaussianRational(0, -4 * k),
        ):
            if val not in out:
                out.append(val)
    return out
