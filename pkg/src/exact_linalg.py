"""
精确线性代数 - 有理数域上的稠密矩阵
秩、核、行简化阶梯形；可选的素域模式仅作为启发式
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from errors import DenominatorDivisibleByP, NotPrime, SingularMatrix
from logger import get_logger

logger = get_logger(__name__)

Scalar = Union[int, Fraction]


def to_scalar(value) -> Scalar:
    """规范化为 int（分母为1时）或 Fraction"""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def format_scalar(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------- 素域

def is_probable_prime(p: int, rounds: int = 16) -> bool:
    """Miller-Rabin 素性测试（固定种子，结果可复现）"""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(p)
    bases = list(small) + [rng.randrange(2, p - 1) for _ in range(rounds)]
    for a in bases:
        a %= p
        if a in (0, 1, p - 1):
            continue
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeScalar:
    """素域 F_p 中的元素"""
    value: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, 'value', self.value % self.modulus)

    @classmethod
    def reduce(cls, x: Scalar, p: int) -> 'PrimeScalar':
        """有理数约化到 F_p"""
        x = Fraction(x)
        if x.denominator % p == 0:
            raise DenominatorDivisibleByP(f"denominator {x.denominator} vanishes mod {p}", modulus=p)
        return cls(x.numerator * pow(x.denominator, -1, p) % p, p)

    def _check(self, other: 'PrimeScalar'):
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")

    def __add__(self, other: 'PrimeScalar') -> 'PrimeScalar':
        self._check(other)
        return PrimeScalar((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: 'PrimeScalar') -> 'PrimeScalar':
        self._check(other)
        return PrimeScalar((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: 'PrimeScalar') -> 'PrimeScalar':
        self._check(other)
        return PrimeScalar(self.value * other.value % self.modulus, self.modulus)

    def inverse(self) -> 'PrimeScalar':
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in F_p")
        return PrimeScalar(pow(self.value, -1, self.modulus), self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0


# ---------------------------------------------------------------- 矩阵

class Matrix:
    """不可变稠密矩阵，行优先存储，元素为 int 或 Fraction"""

    __slots__ = ('rows', 'cols', '_data')

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[Scalar]]):
        self.rows = rows
        self.cols = cols
        self._data: Tuple[Tuple[Scalar, ...], ...] = tuple(tuple(to_scalar(x) for x in row) for row in data)
        if len(self._data) != rows or any(len(row) != cols for row in self._data):
            raise ValueError(f"entries do not match shape {rows}x{cols}")

    @classmethod
    def _trusted(cls, rows: int, cols: int, data) -> 'Matrix':
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> 'Matrix':
        data = [list(row) for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> 'Matrix':
        """按列构造；rows 显式给出以支持零列矩阵"""
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'Matrix':
        return cls._trusted(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls._trusted(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self._data[i]

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(row[j] for row in self._data)

    def columns(self) -> List[Tuple[Scalar, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def transpose(self) -> 'Matrix':
        return Matrix._trusted(self.cols, self.rows, tuple(zip(*self._data)) if self.rows else
                               tuple(() for _ in range(self.cols)))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: 'Matrix') -> 'Matrix':
        if self.shape != other.shape:
            raise ValueError("Cannot add incompatible matrices!")
        return Matrix._trusted(self.rows, self.cols, tuple(
            tuple(to_scalar(a + b) for a, b in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)))

    def scale(self, c: Scalar) -> 'Matrix':
        return Matrix._trusted(self.rows, self.cols, tuple(
            tuple(to_scalar(c * a) for a in row) for row in self._data))

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if self.cols != other.rows:
            raise ValueError("Cannot multiply incompatible matrices!")
        other_rows = other._data
        width = other.cols
        result = []
        for row in self._data:
            acc = [0] * width
            for k, a in enumerate(row):
                if a == 0:
                    continue
                brow = other_rows[k]
                for j in range(width):
                    b = brow[j]
                    if b:
                        acc[j] += a * b
            result.append(tuple(to_scalar(x) for x in acc))
        return Matrix._trusted(self.rows, width, tuple(result))

    def apply(self, vector: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        """矩阵乘列向量"""
        if len(vector) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(to_scalar(sum(a * v for a, v in zip(row, vector) if a and v)) for row in self._data)

    def hstack(self, other: 'Matrix') -> 'Matrix':
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix._trusted(self.rows, self.cols + other.cols,
                               tuple(a + b for a, b in zip(self._data, other._data)))

    def vstack(self, other: 'Matrix') -> 'Matrix':
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix._trusted(self.rows + other.rows, self.cols, self._data + other._data)

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> 'Matrix':
        rows = list(row_indices)
        cols = list(col_indices)
        return Matrix._trusted(len(rows), len(cols), tuple(
            tuple(self._data[i][j] for j in cols) for i in rows))


class RowEchelon(NamedTuple):
    rank: int
    pivots: Tuple[int, ...]
    reduced: Matrix


# ---------------------------------------------------------------- 消元

def _integer_rows(m: Matrix) -> List[List[int]]:
    """每行乘以分母的最小公倍数，化为整数行（行空间不变）"""
    rows = []
    for row in m:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        if den == 1:
            rows.append([int(x) for x in row])
        else:
            rows.append([int(x * den) for x in row])
    return rows


def _bareiss_forward(rows: List[List[int]], ncols: int) -> Tuple[int, List[int], List[List[int]]]:
    """无分数前向消元；主元取列序中第一个非零元"""
    nrows = len(rows)
    prev = 1
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        pivot_row = rows[r]
        piv = pivot_row[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            if a == 0:
                if piv != prev:
                    rows[i] = [(piv * x) // prev for x in row]
            else:
                rows[i] = [(piv * x - a * y) // prev for x, y in zip(row, pivot_row)]
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, rows


def rank(m: Matrix) -> int:
    """有理秩"""
    if m.rows == 0 or m.cols == 0:
        return 0
    # 宽矩阵转置后消元更快，秩不变
    if m.cols < m.rows:
        m = m.transpose()
    r, _, _ = _bareiss_forward(_integer_rows(m), m.cols)
    return r


def rref(m: Matrix) -> RowEchelon:
    """行简化阶梯形：无分数前向消元，最后统一归一化"""
    if m.rows == 0 or m.cols == 0:
        return RowEchelon(0, (), m)
    r, pivots, rows = _bareiss_forward(_integer_rows(m), m.cols)
    echelon = [[Fraction(x) for x in rows[i]] for i in range(r)]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        piv = echelon[i][c]
        if piv != 1:
            echelon[i] = [x / piv for x in echelon[i]]
        for k in range(i):
            factor = echelon[k][c]
            if factor != 0:
                echelon[k] = [x - factor * y for x, y in zip(echelon[k], echelon[i])]
    reduced = echelon + [[0] * m.cols for _ in range(m.rows - r)]
    return RowEchelon(r, tuple(pivots), Matrix(m.rows, m.cols, reduced))


def kernel_basis(m: Matrix) -> List[Tuple[Scalar, ...]]:
    """右零空间的一组基（列向量）；个数 = cols - rank"""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(1 if i == j else 0 for i in range(m.cols)) for j in range(m.cols)]
    ech = rref(m)
    pivot_set = set(ech.pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec: List[Scalar] = [0] * m.cols
        vec[free] = 1
        for i, c in enumerate(ech.pivots):
            vec[c] = to_scalar(-ech.reduced[i, free])
        basis.append(tuple(vec))
    return basis


def rank_mod_p(m: Matrix, p: int) -> int:
    """模 p 秩（启发式）；不超过有理秩"""
    if not is_probable_prime(p):
        raise NotPrime(f"{p} is not prime", modulus=p)
    rows = [[PrimeScalar.reduce(x, p).value for x in row] for row in m]
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[piv], rows[r] = rows[r], rows[piv]
        inv = pow(rows[r][c], -1, p)
        pivot_row = [x * inv % p for x in rows[r]]
        rows[r] = pivot_row
        for i in range(r + 1, nrows):
            a = rows[i][c]
            if a:
                rows[i] = [(x - a * y) % p for x, y in zip(rows[i], pivot_row)]
        r += 1
    return r


def matrix_rank(m: Matrix, modulus: Optional[int] = None) -> int:
    """统一入口：modulus 为 None 时精确秩，否则模 p 秩"""
    return rank(m) if modulus is None else rank_mod_p(m, modulus)


def inverse(m: Matrix) -> Matrix:
    """方阵求逆"""
    if m.rows != m.cols:
        raise SingularMatrix("matrix is not square")
    n = m.rows
    ech = rref(m.hstack(Matrix.identity(n)))
    if n and ech.pivots[:n] != tuple(range(n)):
        raise SingularMatrix("matrix is singular")
    return ech.reduced.submatrix(range(n), range(n, 2 * n))


def column_space(m: Matrix) -> Matrix:
    """列空间的规范基：约化列阶梯形（非零列）"""
    if m.cols == 0:
        return Matrix.zeros(m.rows, 0)
    ech = rref(m.transpose())
    return Matrix.from_columns([ech.reduced.row(i) for i in range(ech.rank)], m.rows)


def solve_in_span(basis: Matrix, targets: Matrix) -> Matrix:
    """求 X 使 basis @ X = targets；basis 需列满秩，不在列空间内则抛 ValueError"""
    k = basis.cols
    if targets.cols == 0:
        return Matrix.zeros(k, 0)
    if k == 0:
        if not targets.is_zero():
            raise ValueError("target not in span of empty basis")
        return Matrix.zeros(0, targets.cols)
    ech = rref(basis.hstack(targets))
    if ech.pivots[:k] != tuple(range(k)):
        raise ValueError("basis columns are dependent")
    if any(c >= k for c in ech.pivots):
        raise ValueError("target not in span")
    return ech.reduced.submatrix(range(k), range(k, k + targets.cols))


def complement_columns(sub: Matrix, ambient: Matrix) -> Matrix:
    """从 ambient 的列中选出 sub 列空间的补，按列序贪心"""
    k = sub.cols
    if ambient.cols == 0:
        return Matrix.zeros(ambient.rows, 0)
    ech = rref(sub.hstack(ambient))
    chosen = [c - k for c in ech.pivots if c >= k]
    return ambient.submatrix(range(ambient.rows), chosen)
