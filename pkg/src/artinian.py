"""
分次 Artinian 代数 A = R/I
每个次数上的标准单项式基、Hilbert 级数、乘法映射与秩、socle、
商理想 A/0:z^k、截断多项式张量扩张、apolar 代数
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from errors import (
    InternalConsistencyError, NonHomogeneousInput, NotArtinian, VariableNameClash,
    ZeroLinearForm, ZeroPolynomial,
)
from exact_linalg import Matrix, Scalar, kernel_basis, matrix_rank, rank, to_scalar
from groebner import (
    IdealHandle, colon_power, ideal_sum, normal_form, pure_power_exponents,
)
from logger import get_logger
from polyring import (
    GREVLEX, Monomial, Polynomial, VariableSet, grevlex_key, mono_mul, monomials_of_degree,
    unit_monomial,
)

logger = get_logger(__name__)


# ---------------------------------------------------------------- Hilbert 级数

@dataclass(frozen=True)
class HilbertSeries:
    """Σ coeffs[k]·q^{offset+k}，首尾零已去除"""
    offset: int = 0
    coeffs: Tuple[int, ...] = ()

    @classmethod
    def from_vector(cls, vector: Sequence[int], offset: int = 0) -> 'HilbertSeries':
        vector = list(vector)
        start = 0
        while start < len(vector) and vector[start] == 0:
            start += 1
        end = len(vector)
        while end > start and vector[end - 1] == 0:
            end -= 1
        if start == end:
            return cls(0, ())
        return cls(offset + start, tuple(vector[start:end]))

    @classmethod
    def from_dict(cls, values: Dict[int, int]) -> 'HilbertSeries':
        if not values:
            return cls(0, ())
        lo, hi = min(values), max(values)
        return cls.from_vector([values.get(d, 0) for d in range(lo, hi + 1)], lo)

    @classmethod
    def geometric(cls, k: int) -> 'HilbertSeries':
        """1 + q + ... + q^{k-1}"""
        return cls.from_vector([1] * k)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def start(self) -> int:
        return self.offset

    @property
    def end(self) -> int:
        """最高次数（零级数为 -1）"""
        return self.offset + len(self.coeffs) - 1 if self.coeffs else -1

    def coefficient(self, d: int) -> int:
        k = d - self.offset
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def total(self) -> int:
        return sum(self.coeffs)

    def to_vector(self) -> List[int]:
        """从 0 次开始的完整系数向量"""
        return [0] * self.offset + list(self.coeffs) if self.coeffs else []

    def __add__(self, other: 'HilbertSeries') -> 'HilbertSeries':
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.start, other.start)
        hi = max(self.end, other.end)
        return HilbertSeries.from_vector(
            [self.coefficient(d) + other.coefficient(d) for d in range(lo, hi + 1)], lo)

    def __sub__(self, other: 'HilbertSeries') -> 'HilbertSeries':
        return self + other.scale(-1)

    def scale(self, c: int) -> 'HilbertSeries':
        return HilbertSeries.from_vector([c * x for x in self.coeffs], self.offset)

    def __mul__(self, other: 'HilbertSeries') -> 'HilbertSeries':
        if self.is_zero() or other.is_zero():
            return HilbertSeries()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HilbertSeries.from_vector(out, self.offset + other.offset)

    def shift(self, d: int) -> 'HilbertSeries':
        if self.is_zero():
            return self
        return HilbertSeries(self.offset + d, self.coeffs)

    def times_geometric(self, k: int) -> 'HilbertSeries':
        """乘以 1 + q + ... + q^{k-1}"""
        return self * HilbertSeries.geometric(k)

    def is_symmetric(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def reflecting_degree(self) -> Optional[Fraction]:
        """对称时返回 (start+end)/2，否则 None"""
        if self.is_zero() or not self.is_symmetric():
            return None
        return Fraction(self.start + self.end, 2)

    def is_unimodal(self) -> bool:
        c = self.coeffs
        k = 0
        while k + 1 < len(c) and c[k] <= c[k + 1]:
            k += 1
        while k + 1 < len(c) and c[k] >= c[k + 1]:
            k += 1
        return k + 1 >= len(c)

    def sperner(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            d = self.offset + k
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {'offset': self.offset, 'coeffs': list(self.coeffs), 'text': str(self)}


def symmetric_product_equivalence(h: HilbertSeries, kmax: int) -> bool:
    """h 对称 ⇔ 对所有 k ≤ kmax，h·(1+...+q^k) 对称"""
    base = h.is_symmetric()
    return all(h.times_geometric(k + 1).is_symmetric() == base for k in range(kmax + 1))


def difference_keeps_reflecting_degree(h2: HilbertSeries, h3: HilbertSeries) -> bool:
    """h2, h3 对称且反射次数相同时，h2 - h3 也对称且反射次数不变"""
    r2, r3 = h2.reflecting_degree(), h3.reflecting_degree()
    if r2 is None or r3 is None or r2 != r3:
        return True
    diff = h2 - h3
    return diff.is_zero() or (diff.is_symmetric() and diff.reflecting_degree() == r2)


# ---------------------------------------------------------------- 线性型与元素

@dataclass(frozen=True)
class LinearForm:
    coefficients: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(to_scalar(c) for c in self.coefficients))

    @classmethod
    def variable(cls, n: int, i: int) -> 'LinearForm':
        return cls(unit_monomial(n, i))

    @classmethod
    def ones(cls, n: int) -> 'LinearForm':
        return cls((1,) * n)

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> 'LinearForm':
        if f.is_zero():
            raise ZeroLinearForm("linear form is zero")
        if f.homogeneous_degree != 1:
            raise NonHomogeneousInput(f"{f} is not a linear form")
        n = len(f.vars)
        return cls(tuple(f.coefficient(unit_monomial(n, i)) for i in range(n)))

    def __len__(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def require_nonzero(self) -> 'LinearForm':
        if self.is_zero():
            raise ZeroLinearForm("linear form must be nonzero")
        return self

    def to_polynomial(self, variables: VariableSet) -> Polynomial:
        if len(variables) != len(self.coefficients):
            raise ValueError("linear form length does not match the ring")
        return Polynomial.linear(variables, self.coefficients)

    def describe(self, variables: VariableSet) -> str:
        return str(self.to_polynomial(variables))

    def __add__(self, other: 'LinearForm') -> 'LinearForm':
        return LinearForm(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, c: Scalar) -> 'LinearForm':
        return LinearForm(tuple(c * a for a in self.coefficients))


class PowerRank(NamedTuple):
    total: int
    per_degree: Tuple[int, ...]


# ---------------------------------------------------------------- 代数

class ZeroAlgebra:
    """零代数（单位理想的商）；是一个值而不是错误"""

    is_zero = True
    dim = 0
    socle_degree = -1
    sigma = 0
    hilbert = HilbertSeries()

    def __repr__(self) -> str:
        return "ZERO_ALGEBRA"

    def __bool__(self) -> bool:
        return False


ZERO_ALGEBRA = ZeroAlgebra()

AlgebraLike = Union['ArtinianAlgebra', ZeroAlgebra]


class ArtinianAlgebra:
    """
    标准分次 Artinian 代数

    每个次数的基为不在 In(I) 中的单项式，按 grevlex 降序排列；
    乘法矩阵的列是源基元素之像在目标基下的坐标
    """

    is_zero = False

    def __init__(self, ideal: IdealHandle, basis: Sequence[Sequence[Monomial]]):
        self.vars = ideal.vars
        self.ideal = ideal
        self.gb = ideal.groebner(GREVLEX)
        self.basis: Tuple[Tuple[Monomial, ...], ...] = tuple(tuple(level) for level in basis)
        self._index = [{m: k for k, m in enumerate(level)} for level in self.basis]
        self.hilbert = HilbertSeries.from_vector([len(level) for level in self.basis])
        self.socle_degree = len(self.basis) - 1
        self.sigma = self.socle_degree + 1
        self._coords: Dict[Monomial, Tuple[Scalar, ...]] = {}
        self._var_tables: Dict[Tuple[int, int], Matrix] = {}
        self._linear_maps: Dict[Tuple, Matrix] = {}
        self._power_maps: Dict[Tuple, Matrix] = {}
        self._socle: Optional[Dict[int, List[Tuple[Scalar, ...]]]] = None

    # ---- 基本量
    @property
    def n(self) -> int:
        return len(self.vars)

    @property
    def dim(self) -> int:
        return sum(len(level) for level in self.basis)

    def dims(self) -> List[int]:
        return [len(level) for level in self.basis]

    def dim_at(self, d: int) -> int:
        return len(self.basis[d]) if 0 <= d < len(self.basis) else 0

    def degrees(self) -> range:
        return range(len(self.basis))

    def __repr__(self) -> str:
        return f"ArtinianAlgebra(vars={self.vars.names}, hilbert={list(self.hilbert.coeffs)})"

    # ---- 坐标
    def monomial_coords(self, m: Monomial) -> Tuple[Scalar, ...]:
        """单项式在 A_{deg m} 标准基下的坐标"""
        d = sum(m)
        if d > self.socle_degree:
            return ()
        level = self._index[d]
        if m in level:
            vec = [0] * len(level)
            vec[level[m]] = 1
            return tuple(vec)
        cached = self._coords.get(m)
        if cached is None:
            nf = normal_form(Polynomial.monomial(self.vars, m), self.gb)
            vec = [0] * len(level)
            for mono, c in nf.items():
                vec[level[mono]] = c
            cached = tuple(vec)
            self._coords[m] = cached
        return cached

    def coords(self, f: Polynomial) -> Dict[int, Tuple[Scalar, ...]]:
        """多项式像的逐次坐标（只保留非零次数）"""
        result: Dict[int, List] = {}
        for m, c in f.items():
            d = sum(m)
            if d > self.socle_degree:
                continue
            vec = result.setdefault(d, [0] * self.dim_at(d))
            for k, v in enumerate(self.monomial_coords(m)):
                if v:
                    vec[k] += c * v
        return {d: tuple(to_scalar(x) for x in vec) for d, vec in sorted(result.items())
                if any(x != 0 for x in vec)}

    def polynomial_of(self, d: int, vector: Sequence[Scalar]) -> Polynomial:
        """坐标向量 -> 标准单项式的线性组合"""
        return Polynomial(self.vars, {m: c for m, c in zip(self.basis[d], vector) if c != 0})

    def element(self, f: Polynomial) -> 'AlgebraElement':
        return AlgebraElement(self, self.coords(f))

    # ---- 乘法映射
    def variable_table(self, j: int, d: int) -> Matrix:
        """×x_j: A_{d-1} -> A_d"""
        key = (j, d)
        table = self._var_tables.get(key)
        if table is None:
            src = self.basis[d - 1] if 1 <= d <= len(self.basis) else ()
            rows = self.dim_at(d)
            columns = []
            e = unit_monomial(self.n, j)
            for s in src:
                columns.append(self.monomial_coords(mono_mul(s, e)) if rows else ())
            table = Matrix.from_columns(columns, rows)
            self._var_tables[key] = table
        return table

    def linear_map(self, g: LinearForm, d: int) -> Matrix:
        """×g: A_d -> A_{d+1}"""
        key = (g.coefficients, d)
        m = self._linear_maps.get(key)
        if m is None:
            m = Matrix.zeros(self.dim_at(d + 1), self.dim_at(d))
            for j, c in enumerate(g.coefficients):
                if c != 0:
                    table = self.variable_table(j, d + 1)
                    m = m + (table if c == 1 else table.scale(c))
            self._linear_maps[key] = m
        return m

    def power_map(self, g: LinearForm, k: int, d: int) -> Matrix:
        """×g^k: A_d -> A_{d+k}，由 ×g 逐次复合"""
        if k == 0:
            return Matrix.identity(self.dim_at(d))
        key = (g.coefficients, k, d)
        m = self._power_maps.get(key)
        if m is None:
            if self.dim_at(d) == 0 or self.dim_at(d + k) == 0:
                m = Matrix.zeros(self.dim_at(d + k), self.dim_at(d))
            else:
                m = self.linear_map(g, d + k - 1) @ self.power_map(g, k - 1, d)
            self._power_maps[key] = m
        return m

    def mult_matrix(self, f: Polynomial, d: int) -> Matrix:
        """×f: A_d -> A_{d+deg f}，f 齐次"""
        e = f.homogeneous_degree
        if e is None:
            if f.is_zero():
                return Matrix.zeros(self.dim_at(d), self.dim_at(d))
            raise NonHomogeneousInput(f"{f} is not homogeneous")
        rows = self.dim_at(d + e)
        columns = []
        for s in self.basis[d] if d < len(self.basis) else ():
            vec = [0] * rows
            if rows:
                for m, c in f.items():
                    for k, v in enumerate(self.monomial_coords(mono_mul(s, m))):
                        if v:
                            vec[k] += c * v
            columns.append(vec)
        return Matrix.from_columns(columns, rows)

    def is_member(self, f: Polynomial) -> bool:
        """f 在 A 中的像是否为零"""
        return not self.coords(f)


class AlgebraElement:
    """A 中的元素：按次数存储标准基坐标"""

    def __init__(self, owner: ArtinianAlgebra, coords: Dict[int, Tuple[Scalar, ...]]):
        self.owner = owner
        self.coords = {d: tuple(v) for d, v in coords.items() if any(x != 0 for x in v)}

    def is_zero(self) -> bool:
        return not self.coords

    def to_polynomial(self) -> Polynomial:
        result = Polynomial.zero(self.owner.vars)
        for d, vec in self.coords.items():
            result = result + self.owner.polynomial_of(d, vec)
        return result

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self.owner.element(self.to_polynomial() + other.to_polynomial())

    def __mul__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self.owner.element(self.to_polynomial() * other.to_polynomial())

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.owner is other.owner and self.coords == other.coords

    def __repr__(self) -> str:
        return f"AlgebraElement({self.to_polynomial()})"


# ---------------------------------------------------------------- 构造

def standard_monomials(ideal: IdealHandle) -> List[List[Monomial]]:
    """逐次 BFS：标准单项式构成序理想"""
    gb = ideal.groebner(GREVLEX)
    n = len(ideal.vars)
    levels: List[List[Monomial]] = []
    current = [(0,) * n]
    while current:
        levels.append(sorted(current, key=grevlex_key, reverse=True))
        nxt = set()
        for s in current:
            for j in range(n):
                m = s[:j] + (s[j] + 1,) + s[j + 1:]
                if m not in nxt and not gb.reduces(m):
                    nxt.add(m)
        current = list(nxt)
    return levels


def build_algebra(ideal: IdealHandle) -> AlgebraLike:
    """R/I；单位理想返回 ZERO_ALGEBRA"""
    if not ideal.homogeneous:
        raise NonHomogeneousInput("ideal generators must be homogeneous")
    gb = ideal.groebner(GREVLEX)
    if gb.is_unit():
        return ZERO_ALGEBRA
    for k, e in pure_power_exponents(ideal).items():
        if e is None:
            raise NotArtinian(ideal.vars.names[k])
    algebra = ArtinianAlgebra(ideal, standard_monomials(ideal))
    logger.debug(f"built algebra over {ideal.vars.names}: hilbert {list(algebra.hilbert.coeffs)}, "
                 f"dim {algebra.dim}")
    return algebra


def hilbert_by_linear_algebra(ideal: IdealHandle, max_degree: int) -> HilbertSeries:
    """独立途径：dim (R/I)_d = dim R_d - rank(生成元张成的 I_d)，不经过 Groebner 基"""
    n = len(ideal.vars)
    values = []
    for d in range(max_degree + 1):
        monos = monomials_of_degree(n, d)
        col = {m: k for k, m in enumerate(monos)}
        rows = []
        for g in ideal.generators:
            e = g.homogeneous_degree
            if e is None or e > d:
                continue
            for m in monomials_of_degree(n, d - e):
                row = [0] * len(monos)
                for mono, c in g.mul_term(m).items():
                    row[col[mono]] = c
                rows.append(row)
        r = rank(Matrix.from_rows(rows, cols=len(monos))) if rows else 0
        values.append(len(monos) - r)
    return HilbertSeries.from_vector(values)


def mult_map(a: AlgebraLike, f: Polynomial) -> Dict[int, Matrix]:
    """×f 的逐次矩阵族 {i: A_i -> A_{i+deg f}}"""
    if a.is_zero:
        return {}
    if f.is_zero():
        return {i: Matrix.zeros(a.dim_at(i), a.dim_at(i)) for i in a.degrees()}
    return {i: a.mult_matrix(f, i) for i in a.degrees()}


def rank_of_power(a: AlgebraLike, g: LinearForm, k: int, modulus: Optional[int] = None) -> PowerRank:
    """×g^k 在每个 A_i 上的秩及其总和"""
    if a.is_zero:
        return PowerRank(0, ())
    per_degree = []
    for i in a.degrees():
        if i + k > a.socle_degree:
            per_degree.append(0)
            continue
        per_degree.append(matrix_rank(a.power_map(g, k, i), modulus))
    return PowerRank(sum(per_degree), tuple(per_degree))


def global_rank(a: AlgebraLike, f: Polynomial) -> int:
    """×f: A -> A 的秩，f 齐次"""
    if a.is_zero:
        return 0
    return sum(rank(m) for m in mult_map(a, f).values())


def socle(a: AlgebraLike) -> Dict[int, List[Tuple[Scalar, ...]]]:
    """逐次 socle 基：所有 ×x_j 的公共核"""
    if a.is_zero:
        return {}
    cached = a._socle
    if cached is not None:
        return cached
    result = {}
    for d in a.degrees():
        if d == a.socle_degree:
            vecs = kernel_basis(Matrix.zeros(0, a.dim_at(d)))
        else:
            stacked = None
            for j in range(a.n):
                t = a.variable_table(j, d + 1)
                stacked = t if stacked is None else stacked.vstack(t)
            vecs = kernel_basis(stacked)
        if vecs:
            result[d] = vecs
    a._socle = result
    return result


def socle_elements(a: AlgebraLike) -> List[Tuple[int, Polynomial]]:
    return [(d, a.polynomial_of(d, v)) for d, vecs in socle(a).items() for v in vecs]


def is_gorenstein(a: AlgebraLike) -> bool:
    if a.is_zero:
        return False
    total = sum(len(v) for v in socle(a).values())
    gorenstein = total == 1
    if gorenstein and not a.hilbert.is_symmetric():
        raise InternalConsistencyError(f"Gorenstein algebra with non-symmetric Hilbert series {a.hilbert}")
    return gorenstein


def quotient_by(a: ArtinianAlgebra, elements: Iterable[Polynomial]) -> AlgebraLike:
    """A/(f_1, ..., f_k)"""
    extra = IdealHandle(a.vars, list(elements))
    return build_algebra(ideal_sum(a.ideal, extra))


def quotient_by_colon(a: AlgebraLike, z: LinearForm, k: int) -> AlgebraLike:
    """R/(I : z^k)；colon 为单位理想时返回 ZERO_ALGEBRA"""
    if a.is_zero or k == 0:
        return a
    z_poly = z.require_nonzero().to_polynomial(a.vars)
    return build_algebra(colon_power(a.ideal, z_poly, k))


def annihilator_lift(a: ArtinianAlgebra, f: Polynomial) -> IdealHandle:
    """I : f 的线性代数算法：I 加上 ×f 核向量的提升（只用于交叉校验）"""
    gens = list(a.ideal.generators)
    for d in a.degrees():
        for vec in kernel_basis(a.mult_matrix(f, d)):
            gens.append(a.polynomial_of(d, vec))
    return IdealHandle(a.vars, gens)


def tensor_truncated(a: ArtinianAlgebra, alpha: int, name: str = 'u', auto_rename: bool = True) -> ArtinianAlgebra:
    """A[u]/(u^alpha)"""
    if alpha < 1:
        raise ValueError("alpha must be positive")
    if name in a.vars and not auto_rename:
        raise VariableNameClash(f"variable '{name}' already exists", name=name)
    fresh = a.vars.fresh_name(name)
    big = a.vars.appended(fresh)
    gens = [g.embed(big) for g in a.ideal.generators]
    gens.append(Polynomial.variable(big, fresh, alpha))
    result = build_algebra(IdealHandle(big, gens))
    expected = a.hilbert.times_geometric(alpha)
    if result.hilbert != expected:
        raise InternalConsistencyError(f"tensor Hilbert series {result.hilbert} != {expected}")
    return result


def catalecticant(F: Polynomial, d: int) -> Matrix:
    """次数 d 的微分算子作用于 F 的矩阵：列为 d 次单项式，行为 (e-d) 次单项式系数"""
    e = F.homogeneous_degree
    n = len(F.vars)
    sources = monomials_of_degree(n, d)
    targets = monomials_of_degree(n, e - d)
    row_of = {m: k for k, m in enumerate(targets)}
    columns = []
    for m in sources:
        image = F.apply_operator(Polynomial.monomial(F.vars, m))
        vec = [0] * len(targets)
        for mono, c in image.items():
            vec[row_of[mono]] = c
        columns.append(vec)
    return Matrix.from_columns(columns, len(targets))


def apolar_generators(F: Polynomial) -> List[Polynomial]:
    """Ann(F) 的生成元：各次数的 catalecticant 核，以及全部 e+1 次单项式"""
    if F.is_zero():
        raise ZeroPolynomial("apolar algebra of the zero form")
    e = F.homogeneous_degree
    if e is None:
        raise NonHomogeneousInput(f"{F} is not homogeneous")
    n = len(F.vars)
    gens = []
    for d in range(1, e + 1):
        sources = monomials_of_degree(n, d)
        for vec in kernel_basis(catalecticant(F, d)):
            gens.append(Polynomial(F.vars, {m: c for m, c in zip(sources, vec) if c != 0}))
    gens.extend(Polynomial.monomial(F.vars, m) for m in monomials_of_degree(n, e + 1))
    return gens


def apolar_algebra(F: Polynomial) -> ArtinianAlgebra:
    """R/Ann(F)，偏导数按特征 0 的真导数计算"""
    algebra = build_algebra(IdealHandle(F.vars, apolar_generators(F)))
    if not is_gorenstein(algebra) or algebra.socle_degree != F.homogeneous_degree:
        raise InternalConsistencyError(f"apolar algebra of {F} is not Gorenstein of socle degree "
                                       f"{F.homogeneous_degree}")
    logger.debug(f"apolar algebra of {F}: hilbert {list(algebra.hilbert.coeffs)}")
    return algebra
