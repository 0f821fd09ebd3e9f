"""Lattices built from binary codes.

``gamma_from_code`` realizes the preimage of a code under reduction
mod 2 inside Z^n carrying the standard form scaled by 1/2 (optionally
negated).  All Gram data is exact: the doubled Gram matrix is stored as
integers, determinants come from fraction-free elimination, and
discriminant groups from an integer Smith normal form.  The two named
lattices of interest are the rank-16 lattice of sixteen disjoint nodal
curves on a desingularized Kummer surface and the rank-8 lattice of an
even eight-set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .codes import LinearCode, code_d, from_generators
from .gf2 import Gf2Matrix


@dataclass(frozen=True)
class CodeLattice:
    """Integral-basis lattice with doubled Gram data.

    The true Gram matrix is gram2 / 2; keeping the doubled copy as plain
    integers keeps every computation exact without a fraction type in hot
    paths.  The basis is upper triangular with respect to the leading
    coordinate, which makes membership a back-substitution.
    """

    n: int
    sign: int
    basis: tuple[tuple[int, ...], ...]
    gram2: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("rank must be positive")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if len(self.basis) != self.n or any(len(v) != self.n for v in self.basis):
            raise ValueError("basis must consist of n vectors of length n")
        if len(self.gram2) != self.n or any(len(r) != self.n for r in self.gram2):
            raise ValueError("gram2 must be n x n")
        for i in range(self.n):
            for t in range(i):
                if self.basis[i][t]:
                    raise ValueError("basis must be triangular by leading coordinate")
            for j in range(self.n):
                expected = self.sign * sum(x * y for x, y in zip(self.basis[i], self.basis[j]))
                if self.gram2[i][j] != expected:
                    raise ValueError("gram2 does not match the basis")

    def gram_entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.gram2[i][j], 2)

    def coordinates_of(self, vec: Sequence[int]) -> tuple[int, ...] | None:
        """Integer coordinates of vec in the basis, or None if not a member."""
        if len(vec) != self.n:
            raise ValueError(f"vector length {len(vec)} does not match rank {self.n}")
        residue = list(vec)
        coeffs = []
        for i in range(self.n):
            d = self.basis[i][i]
            if d == 0:
                coeffs.append(0)
                continue
            q, r = divmod(residue[i], d)
            if r:
                return None
            coeffs.append(q)
            if q:
                for t in range(i, self.n):
                    residue[t] -= q * self.basis[i][t]
        return tuple(coeffs) if not any(residue) else None

    def contains(self, vec: Sequence[int]) -> bool:
        return self.coordinates_of(vec) is not None

    def norm_of(self, vec: Sequence[int]) -> Fraction:
        """Value of the form on an ambient integer vector."""
        return Fraction(self.sign * sum(x * x for x in vec), 2)

    def to_json_dict(self) -> dict:
        det = determinant(self)
        return {
            "n": self.n,
            "sign": self.sign,
            "gram2": [list(r) for r in self.gram2],
            "det": {"num": det.numerator, "den": det.denominator},
            "elementary_divisors": (
                list(discriminant_group(self).elementary_divisors) if is_integral(self) else None
            ),
        }


@dataclass(frozen=True)
class DiscriminantGroup:
    """Elementary divisors (> 1) of an integral Gram matrix, in a
    divisibility chain."""

    elementary_divisors: tuple[int, ...]

    def __post_init__(self) -> None:
        for d in self.elementary_divisors:
            if d <= 1:
                raise ValueError("elementary divisors must exceed 1")
        for a, b in zip(self.elementary_divisors, self.elementary_divisors[1:]):
            if b % a:
                raise ValueError("each divisor must divide the next")

    @property
    def order(self) -> int:
        out = 1
        for d in self.elementary_divisors:
            out *= d
        return out

    def __str__(self) -> str:
        if not self.elementary_divisors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.elementary_divisors)


def gamma_from_code(code: LinearCode, sign: int = 1) -> CodeLattice:
    """The lattice of integer vectors reducing mod 2 into the code.

    The basis lifts the reduced generators to 0/1 vectors and adds 2*e_j
    for every non-pivot coordinate j; sorted by leading coordinate it is
    upper triangular with diagonal 1 at pivots and 2 elsewhere, so the
    index in Z^n is visibly 2^(n-k) and det(gram) = sign^n * 2^(n-2k).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = code.n
    by_leading: dict[int, tuple[int, ...]] = {}
    for row in code.gen.rows:
        by_leading[row.support()[0]] = row.coords()
    for j in range(n):
        if j not in by_leading:
            by_leading[j] = tuple(2 if t == j else 0 for t in range(n))
    basis = tuple(by_leading[j] for j in range(n))
    gram2 = tuple(
        tuple(sign * sum(x * y for x, y in zip(bi, bj)) for bj in basis) for bi in basis
    )
    return CodeLattice(n, sign, basis, gram2)


def kummer_lattice() -> CodeLattice:
    """Rank-16 lattice spanned by sixteen disjoint nodal curves on a
    desingularized Kummer surface: the D_5 code lattice with negated form."""
    return gamma_from_code(code_d(5), -1)


def even_eight_lattice() -> CodeLattice:
    """Rank-8 lattice attached to an even eight-set of nodal curves: the
    lattice of the line code in F_2^8, with negated form."""
    return gamma_from_code(LinearCode.repetition(8), -1)


def is_integral(lat: CodeLattice) -> bool:
    """True when the true Gram matrix is integral, equivalently when the
    source code is isotropic."""
    return all(e % 2 == 0 for row in lat.gram2 for e in row)


def is_even(lat: CodeLattice) -> bool:
    """True when every vector has even integral norm (diagonal divisible
    by 2 after halving).  Requires an integral lattice."""
    if not is_integral(lat):
        raise ValueError("evenness is only defined for integral lattices")
    return all(lat.gram2[i][i] % 4 == 0 for i in range(lat.n))


def _det_int(mat: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if a[i][t]), None)
            if swap is None:
                return 0
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        piv = a[t][t]
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def determinant(lat: CodeLattice) -> Fraction:
    """Exact determinant of the true Gram matrix: det(gram2) / 2^n."""
    return Fraction(_det_int(lat.gram2), 2**lat.n)


def basis_determinant(lat: CodeLattice) -> int:
    """Determinant of the basis matrix; its absolute value is the index in Z^n."""
    return _det_int(lat.basis)


def leading_principal_minors(lat: CodeLattice) -> tuple[Fraction, ...]:
    """Exact leading principal minors of the true Gram matrix."""
    return tuple(
        Fraction(_det_int([row[:t] for row in lat.gram2[:t]]), 2**t)
        for t in range(1, lat.n + 1)
    )


def is_negative_definite(lat: CodeLattice) -> bool:
    """Sylvester test: leading principal minors alternate in sign starting
    negative; any zero minor disqualifies."""
    for t in range(1, lat.n + 1):
        d = _det_int([row[:t] for row in lat.gram2[:t]])
        if d == 0 or (d > 0) != (t % 2 == 0):
            return False
    return True


def _smith_diagonal(mat: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Exact integer elimination, pivoting on the entry of smallest nonzero
    absolute value; restarts whenever a division leaves a remainder (the
    remainder is strictly smaller, so the process terminates).  Returned
    entries are nonnegative and each divides the next.
    """
    a = [list(r) for r in mat]
    nr = len(a)
    nc = len(a[0]) if a else 0
    diag: list[int] = []
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        restart = False
        for i in range(t + 1, nr):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                if q:
                    for j in range(nc):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    restart = True
        if restart:
            continue
        for j in range(t + 1, nc):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                if q:
                    for i in range(nr):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    restart = True
        if restart:
            continue
        offender = None
        for i in range(t + 1, nr):
            if any(a[i][j] % a[t][t] for j in range(t + 1, nc)):
                offender = i
                break
        if offender is not None:
            for j in range(nc):
                a[t][j] += a[offender][j]
            continue
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def discriminant_group(lat: CodeLattice) -> DiscriminantGroup:
    """Cokernel of the integral true Gram matrix as a product of cyclic
    groups, from the Smith normal form."""
    if not is_integral(lat):
        raise ValueError("discriminant group requires an integral lattice")
    gram = [[e // 2 for e in row] for row in lat.gram2]
    diag = _smith_diagonal(gram)
    if len(diag) < lat.n or any(d == 0 for d in diag):
        raise ValueError("degenerate Gram matrix has no finite discriminant group")
    return DiscriminantGroup(tuple(d for d in diag if d > 1))


def code_from_overlattice(n: int, gens: Iterable[Sequence[Fraction | int]]) -> LinearCode:
    """Image code of a half-integral overlattice in (1/2 L)/L = F_2^n.

    Each generator must have all coordinates in (1/2)Z; its class mod L is
    read off by doubling and reducing mod 2.
    """
    rows = []
    for g in gens:
        g = tuple(g)
        if len(g) != n:
            raise ValueError(f"generator length {len(g)} does not match n={n}")
        bits = 0
        for j, x in enumerate(g):
            doubled = Fraction(x) * 2
            if doubled.denominator != 1:
                raise ValueError(f"coordinate {x} is not half-integral")
            if int(doubled) % 2:
                bits |= 1 << j
        rows.append(bits)
    return from_generators(Gf2Matrix.from_ints(rows, n))


def format_gram(lat: CodeLattice) -> str:
    """True Gram matrix as text: integers when integral, p/2 for odd entries."""
    integral = is_integral(lat)
    cells = []
    for row in lat.gram2:
        line = []
        for e in row:
            if integral or e % 2 == 0:
                line.append(str(e // 2))
            else:
                line.append(f"{e}/2")
        cells.append(line)
    width = max(len(c) for line in cells for c in line)
    return "\n".join(" ".join(c.rjust(width) for c in line) for line in cells)
