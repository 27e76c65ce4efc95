"""
关于线性型 z 的相伴分次代数 Gr_(z)(A) ≅ R/In'(I)

先做坐标变换把 z 送到最后一个变量，再对约化 grevlex 基逐个取 In'，
每次构造都用 Hilbert 级数与首项理想做校验
"""

import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from artinian import (
    AlgebraLike, ArtinianAlgebra, LinearForm, build_algebra, hilbert_by_linear_algebra, rank_of_power,
)
from errors import InternalConsistencyError
from exact_linalg import Matrix, format_scalar, inverse as matrix_inverse, rank
from groebner import IdealHandle, ideal_equals, leading_term_ideal
from jordan_csm import all_hold, assertion, jordan_profile
from lefschetz import (
    DEFINITELY_NO, SLP, WLP, SearchParams, find_witness, slp_rank_criterion, stats,
)
from logger import get_logger
from polyring import GREVLEX, Polynomial, in_prime_part, substitute_linear

logger = get_logger(__name__)

CONSISTENT = 'CONSISTENT'
CONTRADICTION = 'CONTRADICTION'
INCONCLUSIVE = 'INCONCLUSIVE'
EXPECTED_ASYMMETRY = 'EXPECTED_ASYMMETRY'


@dataclass(frozen=True)
class CoordinateChange:
    """forward 的第 j 行是 x_j 在新坐标下的像；inverse 的第 j 行是新变量 y_j 关于旧变量的表达"""
    forward: Matrix
    inverse: Matrix
    pivot: int

    def __post_init__(self):
        n = self.forward.rows
        if self.forward @ self.inverse != Matrix.identity(n):
            raise InternalConsistencyError("coordinate change is not invertible as recorded")

    @property
    def is_identity(self) -> bool:
        return self.forward == Matrix.identity(self.forward.rows)

    def apply(self, f: Polynomial) -> Polynomial:
        return substitute_linear(f, self.forward, check_invertible=False)

    def pull_back(self, f: Polynomial) -> Polynomial:
        return substitute_linear(f, self.inverse, check_invertible=False)

    def to_dict(self) -> Dict[str, Any]:
        return {'pivot': self.pivot,
                'forward': [[format_scalar(x) for x in row] for row in self.forward]}


def normalize_z(i: IdealHandle, z: LinearForm) -> Tuple[IdealHandle, CoordinateChange]:
    """主元取 z 中最后一个非零系数的变量，变换后 z 恰为 x_n"""
    c = z.require_nonzero().coefficients
    n = len(c)
    if n != len(i.vars):
        raise ValueError("linear form length does not match the ring")
    pivot = max(k for k in range(n) if c[k] != 0)
    rows = []
    for k in range(n):
        if k == n - 1:
            rows.append(list(c))
        elif k == pivot:
            rows.append([1 if j == n - 1 else 0 for j in range(n)])
        else:
            rows.append([1 if j == k else 0 for j in range(n)])
    back = Matrix.from_rows(rows, cols=n)
    change = CoordinateChange(matrix_inverse(back), back, pivot)
    image = change.apply(z.to_polynomial(i.vars))
    if image != Polynomial.variable(i.vars, n - 1):
        raise InternalConsistencyError(f"coordinate change sends z to {image}, not {i.vars.names[-1]}")
    transformed = IdealHandle(i.vars, [change.apply(g) for g in i.generators])
    logger.debug(f"normalized z={z.describe(i.vars)} with pivot {i.vars.names[pivot]}")
    return transformed, change


def in_prime_ideal(i: IdealHandle) -> IdealHandle:
    """由约化 grevlex 基各元素的 In' 生成"""
    gb = i.groebner(GREVLEX)
    return IdealHandle(i.vars, [in_prime_part(g) for g in gb.elements])


@dataclass
class GradedResult:
    normalized: ArtinianAlgebra
    change: CoordinateChange
    in_prime: IdealHandle
    algebra: ArtinianAlgebra
    z_star: LinearForm


def associated_graded(a: ArtinianAlgebra, z: LinearForm) -> GradedResult:
    ideal, change = normalize_z(a.ideal, z)
    normalized = build_algebra(ideal)
    if normalized.hilbert != a.hilbert:
        raise InternalConsistencyError("Hilbert series changed under a linear change of coordinates")
    in_prime = in_prime_ideal(ideal)
    gr = build_algebra(in_prime)
    if gr.hilbert != a.hilbert:
        raise InternalConsistencyError(f"Hilbert series of R/In'(I) {gr.hilbert} differs from {a.hilbert}")
    if not ideal_equals(leading_term_ideal(in_prime), leading_term_ideal(ideal)):
        raise InternalConsistencyError("In(In'(I)) differs from In(I)")
    z_star = LinearForm.variable(a.n, a.n - 1)
    return GradedResult(normalized, change, in_prime, gr, z_star)


def gr_algebra(a: ArtinianAlgebra, z: LinearForm) -> ArtinianAlgebra:
    return associated_graded(a, z).algebra


def verify_remark37(a: ArtinianAlgebra, z: LinearForm) -> Dict[str, Any]:
    """×z 与 Gr 上 ×z* 的 Jordan 型相同；同时比较两侧的秩判据结论"""
    res = associated_graded(a, z)
    pa = jordan_profile(a, z)
    pg = jordan_profile(res.algebra, res.z_star)
    checks = [assertion('jordan_profiles_equal', pa.blocks == pg.blocks,
                        algebra=[list(b) for b in pa.blocks], graded=[list(b) for b in pg.blocks])]
    wlp_a = rank_of_power(a, z, 1).total == stats(a).cosperner
    wlp_g = rank_of_power(res.algebra, res.z_star, 1).total == stats(res.algebra).cosperner
    slp_a = slp_rank_criterion(a, z)
    slp_g = slp_rank_criterion(res.algebra, res.z_star)
    checks.append(assertion('wlp_rank_criterion_agrees', wlp_a == wlp_g, algebra=wlp_a, graded=wlp_g))
    checks.append(assertion('slp_rank_criterion_agrees', slp_a == slp_g, algebra=slp_a, graded=slp_g))
    return {'profile': pa.to_dict(), 'graded_profile': pg.to_dict(), 'checks': checks,
            'passed': all_hold(checks)}


def _classify(on_a, on_gr) -> str:
    if on_a.is_witness == on_gr.is_witness:
        return CONSISTENT
    # Gr 有性质蕴含 A 有性质；反方向只要求存在某个 z
    if on_gr.is_witness and on_a.status == DEFINITELY_NO:
        return CONTRADICTION
    if on_a.is_witness and on_gr.status == DEFINITELY_NO:
        # A 有性质而这个 z 的 Gr 没有，定理允许
        return EXPECTED_ASYMMETRY
    return INCONCLUSIVE


def _sample_forms(n: int, count: int, params: SearchParams) -> List[LinearForm]:
    rng = random.Random(params.seed + 1)
    return [LinearForm(tuple(rng.randint(1, params.coeff_bound) for _ in range(n))) for _ in range(count)]


def verify_theorem1(a: ArtinianAlgebra, z: LinearForm, params: Optional[SearchParams] = None,
                    z_samples: int = 0) -> Dict[str, Any]:
    """A 与 Gr_(z)(A) 的 WLP/SLP 结论是否相容（给定的 z 以及若干采样的 z）"""
    params = params or SearchParams()
    on_a = {prop: find_witness(a, prop, params) for prop in (WLP, SLP)}
    per_z = []
    contradictions = 0
    for zz in [z] + _sample_forms(a.n, z_samples, params):
        gr = gr_algebra(a, zz)
        row: Dict[str, Any] = {'z': zz.describe(a.vars)}
        for prop in (WLP, SLP):
            on_gr = find_witness(gr, prop, params)
            flag = _classify(on_a[prop], on_gr)
            contradictions += flag == CONTRADICTION
            row[prop] = {'algebra': on_a[prop].status, 'graded': on_gr.status, 'flag': flag}
        per_z.append(row)
    if contradictions:
        logger.error(f"theorem1: {contradictions} contradiction(s) between A and Gr verdicts")
    return {'algebra': {prop: v.to_dict(a.vars) for prop, v in on_a.items()}, 'per_z': per_z,
            'note': 'only the listed linear forms z were examined', 'passed': contradictions == 0}


def hilbert_triple_check(i: IdealHandle, z: LinearForm) -> Dict[str, Any]:
    """A、R/In(I)、Gr_(z)(A) 三者 Hilbert 级数相同，并与不经 Groebner 基的线性代数计算比对"""
    a = build_algebra(i)
    initial = build_algebra(leading_term_ideal(i))
    gr = gr_algebra(a, z)
    oracle = hilbert_by_linear_algebra(i, a.socle_degree + 1)
    checks = [assertion('initial_ideal_hilbert', initial.hilbert == a.hilbert),
              assertion('graded_hilbert', gr.hilbert == a.hilbert),
              assertion('linear_algebra_hilbert', oracle == a.hilbert)]
    return {'hilbert': list(a.hilbert.coeffs), 'initial': list(initial.hilbert.coeffs),
            'graded': list(gr.hilbert.coeffs), 'oracle': list(oracle.coeffs),
            'checks': checks, 'passed': all_hold(checks)}


def _quotient_dim(a: AlgebraLike, g: LinearForm) -> int:
    return a.dim - sum(rank(a.linear_map(g, d)) for d in a.degrees())


def gr_inequality(a: ArtinianAlgebra, z: LinearForm, samples: int = 3, seed: int = 0,
                  coeff_bound: int = 1000) -> Dict[str, Any]:
    """一般线性型 g：dim A/gA ≤ dim Gr/gGr（在规范化坐标下同一个 g 作用于两侧）"""
    res = associated_graded(a, z)
    rng = random.Random(seed)
    rows = []
    for _ in range(samples):
        g = LinearForm(tuple(rng.randint(1, coeff_bound) for _ in range(a.n)))
        lhs = _quotient_dim(res.normalized, g)
        rhs = _quotient_dim(res.algebra, g)
        rows.append(assertion('quotient_dim_inequality', lhs <= rhs, g=g.describe(a.vars),
                              algebra=lhs, graded=rhs))
    return {'samples': rows, 'passed': all_hold(rows)}
