"""
有理系数多元多项式
稀疏表示（指数元组 -> 系数），单项式序，对称函数构造，In' 算子
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
import re
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import IndexOutOfRange, SingularMatrix, VariableNameClash, ZeroPolynomial
from exact_linalg import Matrix, Scalar, format_scalar, rank, to_scalar

Monomial = Tuple[int, ...]

IDENT_RE = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')


class VariableSet:
    """有序变量集，声明顺序即 x_1 > x_2 > ... > x_n"""

    __slots__ = ('names', '_index')

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise ValueError("variable set must be nonempty")
        for name in names:
            if not IDENT_RE.match(name):
                raise ValueError(f"invalid variable name '{name}'")
        if len(set(names)) != len(names):
            raise VariableNameClash(f"duplicate variable names in {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableSet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableSet({', '.join(self.names)})"

    def index(self, name: str) -> int:
        return self._index[name]

    def fresh_name(self, base: str) -> str:
        """生成不冲突的新变量名（冲突时加后缀）"""
        if base not in self._index:
            return base
        k = 1
        while f"{base}_{k}" in self._index:
            k += 1
        return f"{base}_{k}"

    def appended(self, name: str) -> 'VariableSet':
        return VariableSet(self.names + (name,))

    def prepended(self, name: str) -> 'VariableSet':
        return VariableSet((name,) + self.names)

    def subset(self, names: Iterable[str]) -> 'VariableSet':
        return VariableSet(tuple(names))


# ---------------------------------------------------------------- 单项式

def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """a | b"""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def unit_monomial(n: int, i: int, power: int = 1) -> Monomial:
    return tuple(power if j == i else 0 for j in range(n))


def monomials_of_degree(n: int, d: int) -> List[Monomial]:
    """n 个变量的全部 d 次单项式（grevlex 降序）"""
    result = []
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return sorted(result, key=grevlex_key, reverse=True)


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------- 单项式序

def grevlex_key(m: Monomial) -> Tuple:
    """键越大单项式越大：先比总次数，再看最后一个非零差分量"""
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex 或消元块序（block_split 之前的变量为第一块）"""
    kind: str = 'grevlex'
    block_split: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ('grevlex', 'elimination'):
            raise ValueError(f"unknown monomial order '{self.kind}'")
        if self.kind == 'elimination' and not self.block_split:
            raise ValueError("elimination order needs block_split >= 1")

    def key(self, m: Monomial) -> Tuple:
        if self.kind == 'grevlex':
            return grevlex_key(m)
        return (sum(m[:self.block_split]), grevlex_key(m))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1 / 0 / 1 分别表示 a < b, a = b, a > b"""
        if len(a) != len(b):
            raise ValueError("monomials over different variable counts")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self) -> str:
        return self.kind if self.kind == 'grevlex' else f"elimination[{self.block_split}]"


GREVLEX = MonomialOrder('grevlex')


def elimination_order(block_split: int) -> MonomialOrder:
    return MonomialOrder('elimination', block_split)


# ---------------------------------------------------------------- 多项式

class Polynomial:
    """
    不可变稀疏多项式

    terms 为 {指数元组: 系数}，系数非零，int 或 Fraction
    """

    __slots__ = ('vars', '_terms', '_sorted', '_hash')

    def __init__(self, variables: VariableSet, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.vars = variables
        clean = {}
        if terms:
            n = len(variables)
            for m, c in terms.items():
                if c == 0:
                    continue
                if len(m) != n:
                    raise ValueError("monomial length does not match variable count")
                clean[m] = to_scalar(c) if isinstance(c, Fraction) else c
        self._terms: Dict[Monomial, Scalar] = clean
        self._sorted: Dict[MonomialOrder, List[Tuple[Monomial, Scalar]]] = {}
        self._hash = None

    @classmethod
    def _raw(cls, variables: VariableSet, terms: Dict[Monomial, Scalar]) -> 'Polynomial':
        p = cls.__new__(cls)
        p.vars = variables
        p._terms = terms
        p._sorted = {}
        p._hash = None
        return p

    # ---- 构造
    @classmethod
    def zero(cls, variables: VariableSet) -> 'Polynomial':
        return cls._raw(variables, {})

    @classmethod
    def constant(cls, variables: VariableSet, c: Scalar) -> 'Polynomial':
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables: VariableSet) -> 'Polynomial':
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables: VariableSet, name_or_index, power: int = 1) -> 'Polynomial':
        i = name_or_index if isinstance(name_or_index, int) else variables.index(name_or_index)
        return cls._raw(variables, {unit_monomial(len(variables), i, power): 1})

    @classmethod
    def monomial(cls, variables: VariableSet, m: Monomial, c: Scalar = 1) -> 'Polynomial':
        return cls(variables, {tuple(m): c})

    @classmethod
    def linear(cls, variables: VariableSet, coefficients: Sequence[Scalar]) -> 'Polynomial':
        n = len(variables)
        return cls(variables, {unit_monomial(n, i): c for i, c in enumerate(coefficients)})

    # ---- 查询
    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(tuple(m), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    @property
    def homogeneous_degree(self) -> Optional[int]:
        """所有项次数相同时返回该次数，否则 None（零多项式也为 None）"""
        degrees = {sum(m) for m in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree is not None

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> List[Tuple[Monomial, Scalar]]:
        cached = self._sorted.get(order)
        if cached is None:
            cached = sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)
            self._sorted[order] = cached
        return cached

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return self.sorted_terms(order)[0][0]

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Scalar:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return self.sorted_terms(order)[0][1]

    def homogeneous_components(self) -> Dict[int, 'Polynomial']:
        parts: Dict[int, Dict[Monomial, Scalar]] = {}
        for m, c in self._terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._raw(self.vars, t) for d, t in sorted(parts.items())}

    def variables_used(self) -> List[int]:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    # ---- 算术
    def _check(self, other: 'Polynomial'):
        if self.vars != other.vars:
            raise ValueError(f"polynomials over different rings: {self.vars} vs {other.vars}")

    def _coerce(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for m, c in other._terms.items():
            v = result.get(m, 0) + c
            if v == 0:
                result.pop(m, None)
            else:
                result[m] = to_scalar(v) if isinstance(v, Fraction) else v
        return Polynomial._raw(self.vars, result)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial._raw(self.vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'Polynomial':
        return (-self) + other

    def scale(self, c: Scalar) -> 'Polynomial':
        if c == 0:
            return Polynomial.zero(self.vars)
        return Polynomial._raw(self.vars, {m: to_scalar(c * v) for m, v in self._terms.items()})

    def mul_term(self, m: Monomial, c: Scalar = 1) -> 'Polynomial':
        """乘以单项 c * x^m"""
        if c == 0:
            return Polynomial.zero(self.vars)
        return Polynomial._raw(self.vars, {
            mono_mul(k, m): to_scalar(c * v) for k, v in self._terms.items()})

    def __mul__(self, other) -> 'Polynomial':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            a, b = self._terms, other._terms
        else:
            a, b = other._terms, self._terms
        result: Dict[Monomial, Scalar] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                result[m] = result.get(m, 0) + ca * cb
        return Polynomial(self.vars, result)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Polynomial':
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self, order: MonomialOrder = GREVLEX) -> 'Polynomial':
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    def derivative(self, index: int) -> 'Polynomial':
        """对第 index 个变量求偏导"""
        result = {}
        for m, c in self._terms.items():
            e = m[index]
            if e:
                result[m[:index] + (e - 1,) + m[index + 1:]] = c * e
        return Polynomial._raw(self.vars, result)

    def apply_operator(self, operator: 'Polynomial') -> 'Polynomial':
        """operator(∂/∂x_1, ..., ∂/∂x_n) 作用于 self"""
        self._check(operator)
        result = Polynomial.zero(self.vars)
        for m, c in operator._terms.items():
            term = self
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term.derivative(i)
                    if term.is_zero():
                        break
                if term.is_zero():
                    break
            if not term.is_zero():
                result = result + term.scale(c)
        return result

    def exact_divide(self, divisor: 'Polynomial') -> 'Polynomial':
        """整除；不能整除时抛 ValueError"""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lm_d = divisor.leading_monomial()
        lc_d = divisor.leading_coefficient()
        remainder = self
        quotient: Dict[Monomial, Scalar] = {}
        while not remainder.is_zero():
            lm = remainder.leading_monomial()
            if not mono_divides(lm_d, lm):
                raise ValueError(f"{divisor} does not divide {self}")
            m = mono_div(lm, lm_d)
            c = to_scalar(Fraction(remainder.leading_coefficient()) / lc_d)
            quotient[m] = c
            remainder = remainder - divisor.mul_term(m, c)
        return Polynomial(self.vars, quotient)

    def embed(self, target: VariableSet) -> 'Polynomial':
        """按变量名嵌入更大（或重排的）环"""
        positions = [target.index(name) for name in self.vars.names]
        n = len(target)
        result = {}
        for m, c in self._terms.items():
            exps = [0] * n
            for pos, e in zip(positions, m):
                exps[pos] = e
            result[tuple(exps)] = c
        return Polynomial._raw(target, result)

    def restrict(self, target: VariableSet) -> 'Polynomial':
        """投影到子环：target 以外的变量置零"""
        keep = [self.vars.index(name) for name in target.names]
        dropped = [i for i in range(len(self.vars)) if i not in set(keep)]
        result = {}
        for m, c in self._terms.items():
            if any(m[i] for i in dropped):
                continue
            result[tuple(m[i] for i in keep)] = c
        return Polynomial._raw(target, result)

    def substitute_zero(self, index: int) -> 'Polynomial':
        """令第 index 个变量为 0（环不变）"""
        return Polynomial._raw(self.vars, {m: c for m, c in self._terms.items() if m[index] == 0})

    # ---- 比较与打印
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(GREVLEX):
            negative = c < 0
            mag = -c if negative else c
            mono = format_monomial(m, self.vars.names)
            if mono == "1":
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# ---------------------------------------------------------------- 对称函数

def _resolve_subset(variables: VariableSet, subset: Optional[Sequence[str]]) -> List[int]:
    if subset is None:
        return list(range(len(variables)))
    return [variables.index(name) for name in subset]


def elementary_symmetric(i: int, variables: VariableSet, power: int = 1,
                         subset: Optional[Sequence[str]] = None) -> Polynomial:
    """e_i(x_1^r, ..., x_n^r)"""
    idx = _resolve_subset(variables, subset)
    if not 1 <= i <= len(idx):
        raise IndexOutOfRange(f"elementary symmetric index {i} outside 1..{len(idx)}", index=i)
    if power < 1:
        raise IndexOutOfRange(f"power {power} must be positive", index=power)
    n = len(variables)
    terms = {}
    for combo in combinations(idx, i):
        exps = [0] * n
        for j in combo:
            exps[j] = power
        terms[tuple(exps)] = 1
    return Polynomial._raw(variables, terms)


def power_sum(d: int, variables: VariableSet, subset: Optional[Sequence[str]] = None) -> Polynomial:
    idx = _resolve_subset(variables, subset)
    if d == 0:
        return Polynomial.constant(variables, len(idx))
    n = len(variables)
    return Polynomial._raw(variables, {unit_monomial(n, j, d): 1 for j in idx})


def complete_homogeneous(d: int, variables: VariableSet, subset: Optional[Sequence[str]] = None) -> Polynomial:
    """d 次完全齐次对称函数（给定变量上所有 d 次单项式之和）"""
    if d < 0:
        return Polynomial.zero(variables)
    idx = _resolve_subset(variables, subset)
    n = len(variables)
    terms = {}
    for combo in combinations_with_replacement(idx, d):
        exps = [0] * n
        for j in combo:
            exps[j] += 1
        terms[tuple(exps)] = 1
    return Polynomial._raw(variables, terms)


# ---------------------------------------------------------------- In' 与线性替换

def in_prime_part(f: Polynomial, last_var_index: Optional[int] = None) -> Polynomial:
    """f = Σ f_j x_n^j 中 j 最小的非零项 f_j x_n^j"""
    if f.is_zero():
        raise ZeroPolynomial("In' of the zero polynomial is undefined")
    k = len(f.vars) - 1 if last_var_index is None else last_var_index
    j = min(m[k] for m in f.monomials())
    return Polynomial._raw(f.vars, {m: c for m, c in f.items() if m[k] == j})


def linear_images(m: Matrix, variables: VariableSet) -> List[Polynomial]:
    """矩阵第 j 行是 x_j 的像"""
    n = len(variables)
    return [Polynomial.linear(variables, m.row(j)) for j in range(n)]


def substitute_linear(f: Polynomial, m: Matrix, check_invertible: bool = True) -> Polynomial:
    """x_j -> Σ_k m[j,k] x_k"""
    n = len(f.vars)
    if m.shape != (n, n):
        raise SingularMatrix(f"substitution matrix must be {n}x{n}, got {m.rows}x{m.cols}")
    if check_invertible and rank(m) < n:
        raise SingularMatrix("substitution matrix is not invertible")
    images = linear_images(m, f.vars)

    @lru_cache(maxsize=None)
    def image_power(j: int, e: int) -> Polynomial:
        if e == 0:
            return Polynomial.one(f.vars)
        return image_power(j, e - 1) * images[j]

    result = Polynomial.zero(f.vars)
    for mono, c in f.items():
        term = Polynomial.constant(f.vars, c)
        for j, e in enumerate(mono):
            if e:
                term = term * image_power(j, e)
        result = result + term
    return result
