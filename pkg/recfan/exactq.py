"""
Exact rational scalars, vectors and the small amount of linear algebra the
polyhedral code needs. Scalars are ``fractions.Fraction`` values, which keep
themselves in lowest terms with a positive denominator, so structural equality
is semantic equality and vectors can be sorted and deduplicated directly.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from recfan.errors import InputError

Rational = Fraction
QVector = Tuple[Fraction, ...]
RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse ``"p/q"``, ``"p"``, an int or a Fraction into a Rational.

    Floats are refused: a float literal is rarely the rational the user meant.

    Examples
    --------
    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError("rationals must be given as strings or integers, got {!r}".format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError("not a rational number: {!r}".format(value))
    raise InputError("not a rational number: {!r}".format(value))


def rational_to_str(q: Fraction) -> str:
    # Fraction renders "p/q", or "p" when q == 1, sign on the numerator
    return str(Fraction(q))


def qvector(values: Iterable[RationalLike]) -> QVector:
    return tuple(parse_rational(_) for _ in values)


def zero_vector(n: int) -> QVector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> QVector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def dot(a: Sequence, b: Sequence) -> Fraction:
    assert len(a) == len(b), "Cannot dot product vectors of different dimensions!"
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Sequence, b: Sequence) -> QVector:
    assert len(a) == len(b), "Cannot add vectors of different dimensions!"
    return tuple(Fraction(x + y) for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> QVector:
    assert len(a) == len(b), "Cannot subtract vectors of different dimensions!"
    return tuple(Fraction(x - y) for x, y in zip(a, b))


def scale(a: Sequence, s) -> QVector:
    return tuple(Fraction(x * s) for x in a)


def is_zero(a: Sequence) -> bool:
    return not any(a)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integer_vector(v: Sequence) -> Tuple[int, ...]:
    """
    Positive multiple of ``v`` with integer entries whose gcd is 1.

    The zero vector maps to itself. Positive scaling keeps the direction, so
    this is the canonical scale both for rays and for halfspaces.

    Examples
    --------
    >>> integer_vector([Fraction(1, 2), Fraction(-1, 3)])
    (3, -2)
    """
    fractions = [Fraction(_) for _ in v]
    denominator = reduce(_lcm, (_.denominator for _ in fractions), 1)
    ints = [int(_ * denominator) for _ in fractions]
    g = reduce(gcd, (abs(_) for _ in ints), 0)
    if g > 1:
        ints = [_ // g for _ in ints]
    return tuple(ints)


def primitive(v: Sequence) -> QVector:
    return tuple(Fraction(_) for _ in integer_vector(v))


def sign_normalized(v: Sequence) -> QVector:
    """Primitive integer multiple of ``v`` whose first nonzero entry is positive."""
    w = integer_vector(v)
    lead = next((_ for _ in w if _), 0)
    if lead < 0:
        w = tuple(-_ for _ in w)
    return tuple(Fraction(_) for _ in w)


@dataclass(frozen=True)
class QMatrix:
    rows: Tuple[QVector, ...]
    ncols: int

    @classmethod
    def of(cls, rows: Iterable[Iterable[RationalLike]], ncols: Optional[int] = None) -> "QMatrix":
        rows = tuple(qvector(_) for _ in rows)
        if ncols is None:
            if not rows:
                raise InputError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(_) != ncols for _ in rows):
            raise InputError("all rows of a matrix must have {} columns".format(ncols))
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)


def rref(m: QMatrix) -> Tuple[QMatrix, List[int]]:
    """
    Reduced row-echelon form of ``m`` and its pivot columns.

    Zero rows are kept at the bottom so the result has the shape of ``m``.

    Examples
    --------
    >>> reduced, pivots = rref(QMatrix.of([[2, 4], [1, 2]]))
    >>> reduced.rows, pivots
    (((Fraction(1, 1), Fraction(2, 1)), (Fraction(0, 1), Fraction(0, 1))), [0])
    """
    rows = [[Fraction(x) for x in _] for _ in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1

    return QMatrix(tuple(tuple(_) for _ in rows), m.ncols), pivots


def rank(m: QMatrix) -> int:
    """
    Rank of ``m``.

    Rows are first scaled to primitive integer vectors and eliminated without
    division, which is much cheaper than Fraction arithmetic and still exact.
    """
    rows = [list(integer_vector(_)) for _ in m.rows if any(_)]
    r = 0
    for c in range(m.ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                row = [p[c] * x - f * y for x, y in zip(rows[i], p)]
                g = reduce(gcd, (abs(_) for _ in row), 0)
                rows[i] = [_ // g for _ in row] if g > 1 else row
        r += 1

    return r


def solve(m: QMatrix, b: Sequence[RationalLike]) -> Optional[QVector]:
    """
    One exact solution of ``m x = b``, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    b = qvector(b)
    if len(b) != m.nrows:
        raise InputError("right-hand side has {} entries, matrix has {} rows".format(len(b), m.nrows))
    augmented = QMatrix(tuple(row + (rhs,) for row, rhs in zip(m.rows, b)), m.ncols + 1)
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for row, c in zip(reduced.rows, pivots):
        x[c] = row[-1]

    return tuple(x)


def kernel_basis(m: QMatrix) -> List[QVector]:
    """
    Basis of ``{v : m v = 0}``, one vector per free column of the rref.

    Examples
    --------
    >>> kernel_basis(QMatrix.of([[1, 1, 0]]))
    [(Fraction(-1, 1), Fraction(1, 1), Fraction(0, 1)), (Fraction(0, 1), Fraction(0, 1), Fraction(1, 1))]
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[free] = Fraction(1)
        for row, c in zip(reduced.rows, pivots):
            v[c] = -row[free]
        basis.append(tuple(v))

    return basis
