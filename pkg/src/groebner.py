"""
Buchberger 算法与理想运算
约化 Groebner 基、正规形、和/交/商理想、相等与包含、首项理想、极小生成元
"""

import heapq
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from errors import NonHomogeneousInput, ZeroPolynomial
from exact_linalg import Matrix, rank, to_scalar
from logger import get_logger
from polyring import (
    GREVLEX, Monomial, MonomialOrder, Polynomial, VariableSet, elimination_order,
    mono_coprime, mono_div, mono_divides, mono_lcm, monomials_of_degree,
)

logger = get_logger(__name__)


def _neg_key(key):
    if isinstance(key, tuple):
        return tuple(_neg_key(k) for k in key)
    return -key


@dataclass(frozen=True)
class GBasis:
    """给定单项式序下的约化 Groebner 基（首系数为 1，按首项降序）"""
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]

    def __post_init__(self):
        divisors = []
        for g in self.elements:
            lm = g.leading_monomial(self.order)
            tail = [(m, c) for m, c in g.items() if m != lm]
            divisors.append((lm, g.leading_coefficient(self.order), tail))
        object.__setattr__(self, '_divisors', divisors)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> List[Monomial]:
        return [lm for lm, _, _ in self._divisors]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def find_divisor(self, m: Monomial):
        for lm, lc, tail in self._divisors:
            if mono_divides(lm, m):
                return lm, lc, tail
        return None

    def reduces(self, m: Monomial) -> bool:
        return self.find_divisor(m) is not None


def _reduce(terms: Dict[Monomial, object], divisors, order: MonomialOrder):
    """按 divisors 完全约化；返回余式项字典"""
    work = dict(terms)
    heap = [(_neg_key(order.key(m)), m) for m in work]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        hit = None
        for lm, lc, tail in divisors:
            if mono_divides(lm, m):
                hit = (lm, lc, tail)
                break
        if hit is None:
            remainder[m] = c
            continue
        lm, lc, tail = hit
        q = mono_div(m, lm)
        factor = c if lc == 1 else Fraction(c) / lc
        for tm, tc in tail:
            nm = tuple(a + b for a, b in zip(tm, q))
            old = work.get(nm)
            if old is None:
                work[nm] = -factor * tc
                heapq.heappush(heap, (_neg_key(order.key(nm)), nm))
            else:
                v = old - factor * tc
                if v == 0:
                    del work[nm]
                else:
                    work[nm] = v
    return {m: to_scalar(c) if isinstance(c, Fraction) else c for m, c in remainder.items()}


def normal_form(f: Polynomial, g: GBasis) -> Polynomial:
    """f 对 g 的余式：没有项能被 g 的首项整除"""
    if f.is_zero() or not g.elements:
        return f
    if f.vars != g.elements[0].vars:
        raise ValueError("polynomial and basis live in different rings")
    return Polynomial._raw(f.vars, _reduce(f.terms, g._divisors, g.order))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    a = f.mul_term(mono_div(lcm, lf), Fraction(1) / f.leading_coefficient(order))
    b = g.mul_term(mono_div(lcm, lg), Fraction(1) / g.leading_coefficient(order))
    return a - b


def _buchberger(generators: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """正规策略选对，互素准则与链准则剪枝"""
    basis: List[Polynomial] = []
    leads: List[Monomial] = []
    divisors = []
    pending = set()
    queue: List[Tuple] = []

    def add(h: Polynomial):
        h = h.monic(order)
        lm = h.leading_monomial(order)
        k = len(basis)
        basis.append(h)
        leads.append(lm)
        divisors.append((lm, 1, [(m, c) for m, c in h.items() if m != lm]))
        for i in range(k):
            lcm = mono_lcm(leads[i], lm)
            pending.add((i, k))
            heapq.heappush(queue, (order.key(lcm), i, k, lcm))

    for f in generators:
        if f.is_zero():
            continue
        r = _reduce(f.terms, divisors, order)
        if r:
            add(Polynomial._raw(f.vars, r))
            if basis[-1].is_constant():
                return [basis[-1]]

    reductions = 0
    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        pending.discard((i, j))
        if mono_coprime(leads[i], leads[j]):
            continue
        chain = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(leads[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = _reduce(s.terms, divisors, order)
        reductions += 1
        if r:
            add(Polynomial._raw(s.vars, r))
            if basis[-1].is_constant():
                return [basis[-1]]
    logger.debug(f"Buchberger finished: {len(basis)} elements, {reductions} S-pair reductions")
    return basis


def _interreduce(basis: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """极小化并互约化，得到唯一的约化基"""
    leads = [g.leading_monomial(order) for g in basis]
    keep = []
    for i, lm in enumerate(leads):
        dominated = False
        for j, other in enumerate(leads):
            if j == i:
                continue
            if mono_divides(other, lm) and (other != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(basis[i])
    reduced = []
    for i, g in enumerate(keep):
        others = []
        for j, h in enumerate(keep):
            if j != i:
                lm = h.leading_monomial(order)
                others.append((lm, h.leading_coefficient(order), [(m, c) for m, c in h.items() if m != lm]))
        lm = g.leading_monomial(order)
        lc = g.leading_coefficient(order)
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, order)
        tail[lm] = lc
        reduced.append(Polynomial(g.vars, tail).monic(order))
    reduced.sort(key=lambda p: order.key(p.leading_monomial(order)), reverse=True)
    return reduced


class IdealHandle:
    """
    齐次理想，按单项式序缓存约化 Groebner 基

    allow_inhomogeneous 仅供内部辅助计算（如求交时的 t·I + (1-t)·J）
    """

    def __init__(self, variables: VariableSet, generators: Sequence[Polynomial],
                 allow_inhomogeneous: bool = False):
        self.vars = variables
        gens = []
        for g in generators:
            if g.vars != variables:
                g = g.embed(variables)
            if g.is_zero():
                continue
            if not allow_inhomogeneous and not g.is_homogeneous():
                raise NonHomogeneousInput(f"generator {g} is not homogeneous", generator=str(g))
            gens.append(g)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self._gb_cache: Dict[MonomialOrder, GBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, variables: VariableSet) -> 'IdealHandle':
        return cls(variables, [Polynomial.one(variables)])

    @classmethod
    def monomial_ideal(cls, variables: VariableSet, monomials: Sequence[Monomial]) -> 'IdealHandle':
        return cls(variables, [Polynomial.monomial(variables, m) for m in monomials])

    def groebner(self, order: MonomialOrder = GREVLEX) -> GBasis:
        cached = self._gb_cache.get(order)
        if cached is not None:
            return cached
        # 并发时可能重复计算，结果相同，写入一次即可
        elements = _interreduce(_buchberger(self.generators, order), order) if self.generators else []
        gb = GBasis(order, tuple(elements))
        with self._lock:
            self._gb_cache.setdefault(order, gb)
        logger.debug(f"reduced GB ({order}) over {self.vars.names}: {len(gb)} elements")
        return self._gb_cache[order]

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def __repr__(self) -> str:
        return f"IdealHandle({', '.join(str(g) for g in self.generators)})"

    def to_strings(self) -> List[str]:
        return [str(g) for g in self.generators]


# ---------------------------------------------------------------- 理想运算

def reduced_groebner(i: IdealHandle, order: MonomialOrder = GREVLEX) -> GBasis:
    return i.groebner(order)


def ideal_sum(i: IdealHandle, j: IdealHandle) -> IdealHandle:
    _same_ring(i, j)
    return IdealHandle(i.vars, i.generators + j.generators,
                       allow_inhomogeneous=not (i.homogeneous and j.homogeneous))


def ideal_contains(i: IdealHandle, f: Polynomial) -> bool:
    if f.is_zero():
        return True
    return normal_form(f, i.groebner()).is_zero()


def ideal_equals(i: IdealHandle, j: IdealHandle) -> bool:
    _same_ring(i, j)
    return i.groebner().elements == j.groebner().elements


def ideal_contains_ideal(i: IdealHandle, j: IdealHandle) -> bool:
    """j ⊆ i"""
    return all(ideal_contains(i, g) for g in j.generators)


def intersection(i: IdealHandle, j: IdealHandle) -> IdealHandle:
    """I ∩ J：辅助变量 t 置于首位，用消元块序消去 t"""
    _same_ring(i, j)
    if i.is_zero() or j.is_zero():
        return IdealHandle(i.vars, [])
    if i.is_unit():
        return j
    if j.is_unit():
        return i
    t_name = i.vars.fresh_name('t')
    big = i.vars.prepended(t_name)
    t = Polynomial.variable(big, 0)
    one_minus_t = Polynomial.one(big) - t
    gens = [t * g.embed(big) for g in i.generators] + [one_minus_t * h.embed(big) for h in j.generators]
    aux = IdealHandle(big, gens, allow_inhomogeneous=True)
    gb = aux.groebner(elimination_order(1))
    kept = [g.restrict(i.vars) for g in gb.elements
            if all(m[0] == 0 for m in g.monomials())]
    logger.debug(f"intersection: {len(gb)} elements in the block basis, {len(kept)} free of {t_name}")
    return IdealHandle(i.vars, kept)


def colon(i: IdealHandle, f: Polynomial) -> IdealHandle:
    """I : f = (I ∩ (f)) / f"""
    if f.is_zero():
        raise ZeroPolynomial("colon by the zero polynomial")
    if f.vars != i.vars:
        raise ValueError("colon element lives in a different ring")
    if not f.is_homogeneous():
        raise NonHomogeneousInput(f"colon element {f} is not homogeneous")
    if f.is_constant() or i.is_zero():
        return i
    if i.is_unit():
        return i
    meet = intersection(i, IdealHandle(i.vars, [f]))
    quotients = [g.exact_divide(f) for g in meet.generators]
    return IdealHandle(i.vars, quotients)


def colon_power(i: IdealHandle, f: Polynomial, k: int) -> IdealHandle:
    """I : f^k，k 次逐次单元素商"""
    result = i
    for _ in range(k):
        if result.is_unit():
            break
        result = colon(result, f)
    return result


def colon_chain(i: IdealHandle, f: Polynomial, k_max: Optional[int] = None) -> List[IdealHandle]:
    """[I : f^0, I : f^1, ...]，到单位理想（或 k_max）为止"""
    chain = [i]
    k = 0
    while not chain[-1].is_unit() and (k_max is None or k < k_max):
        nxt = colon(chain[-1], f)
        k += 1
        if k_max is None and ideal_equals(nxt, chain[-1]):
            # 不再变化（非 Artinian 情形），防止死循环
            break
        chain.append(nxt)
    return chain


def leading_term_ideal(i: IdealHandle, order: MonomialOrder = GREVLEX) -> IdealHandle:
    return IdealHandle.monomial_ideal(i.vars, i.groebner(order).leading_monomials())


def pure_power_exponents(i: IdealHandle) -> Dict[int, Optional[int]]:
    """每个变量在首项理想中最小的纯幂次数（没有则 None）"""
    n = len(i.vars)
    result: Dict[int, Optional[int]] = {k: None for k in range(n)}
    for lm in i.groebner().leading_monomials():
        support = [k for k, e in enumerate(lm) if e]
        if len(support) == 1:
            k = support[0]
            if result[k] is None or lm[k] < result[k]:
                result[k] = lm[k]
    if i.is_unit():
        return {k: 0 for k in range(n)}
    return result


def is_zero_dimensional(i: IdealHandle) -> bool:
    return all(e is not None for e in pure_power_exponents(i).values())


def _degree_span(gens: Sequence[Polynomial], d: int, n: int, columns: Dict[Monomial, int]) -> List[List]:
    rows = []
    for g in gens:
        e = g.homogeneous_degree
        for m in monomials_of_degree(n, d - e):
            prod = g.mul_term(m)
            row = {}
            for mono, c in prod.items():
                if mono not in columns:
                    columns[mono] = len(columns)
                row[columns[mono]] = c
            rows.append(row)
    return rows


def _rank_of_rows(rows: List[Dict[int, object]], width: int) -> int:
    if not rows:
        return 0
    return rank(Matrix.from_rows([[row.get(c, 0) for c in range(width)] for row in rows], cols=width))


def minimal_generators(i: IdealHandle) -> List[Tuple[int, int]]:
    """
    极小齐次生成元的次数分布 [(degree, count), ...]

    count_d = dim I_d - dim (R_1 · I_{d-1})
    """
    if i.is_zero():
        return []
    if i.is_unit():
        return [(0, 1)]
    n = len(i.vars)
    gens = [g for g in i.generators if not g.is_zero()]
    degrees = sorted({g.homogeneous_degree for g in gens})
    result = []
    for d in degrees:
        columns: Dict[Monomial, int] = {}
        lower = _degree_span([g for g in gens if g.homogeneous_degree < d], d, n, columns)
        current = _degree_span([g for g in gens if g.homogeneous_degree == d], d, n, columns)
        width = len(columns)
        r_low = _rank_of_rows(lower, width)
        r_all = _rank_of_rows(lower + current, width)
        if r_all > r_low:
            result.append((d, r_all - r_low))
    return result


def minimal_generator_count(i: IdealHandle) -> int:
    return sum(count for _, count in minimal_generators(i))


def is_complete_intersection(i: IdealHandle) -> bool:
    """Artinian 且极小生成元个数等于变量个数"""
    if i.is_unit():
        return False
    return is_zero_dimensional(i) and minimal_generator_count(i) == len(i.vars)


def verify_buchberger_criterion(gb: GBasis) -> bool:
    """所有 S 多项式对 gb 约化为零"""
    elements = gb.elements
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            s = s_polynomial(elements[a], elements[b], gb.order)
            if not normal_form(s, gb).is_zero():
                return False
    return True


def _same_ring(i: IdealHandle, j: IdealHandle):
    if i.vars != j.vars:
        raise ValueError(f"ideals over different rings: {i.vars} vs {j.vars}")
