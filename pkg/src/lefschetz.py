"""
Lefschetz 性质检查
Sperner / CoSperner / Sperner 向量，定义层面的 WLP/SLP 检查，
结构性否定证书，随机 witness 搜索，截断张量判据
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from artinian import (
    AlgebraLike, LinearForm, rank_of_power, socle, tensor_truncated,
)
from errors import DenominatorDivisibleByP, InternalConsistencyError, NonSymmetricHilbert
from exact_linalg import format_scalar, matrix_rank, rank
from logger import get_logger
from polyring import Polynomial

logger = get_logger(__name__)

WLP = 'WLP'
SLP = 'SLP'

WITNESS = 'witness'
DEFINITELY_NO = 'definitely_no'
NO_WITNESS_FOUND = 'no_witness_found'

SI_SUBSTITUTION_NOTE = "SI-sequence hypothesis replaced by 'unimodal and symmetric'"


@dataclass(frozen=True)
class SearchParams:
    """随机搜索参数；默认值与 config 的 search 节一致"""
    trials: int = 8
    seed: int = 0
    coeff_bound: int = 1000
    modulus: Optional[int] = None

    @classmethod
    def from_config(cls, config) -> 'SearchParams':
        search = config.search
        return cls(trials=int(search.get('trials', 8)), seed=int(search.get('seed', 0)),
                   coeff_bound=int(search.get('coeff_bound', 1000)),
                   modulus=config.linalg.get('modulus'))

    def with_trials(self, trials: int) -> 'SearchParams':
        return SearchParams(trials, self.seed, self.coeff_bound, self.modulus)


@dataclass
class LefschetzStats:
    sperner: int
    cosperner: int
    sperner_vector: Optional[Tuple[int, ...]] = None
    sperner_vector_reason: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {'sperner': self.sperner, 'cosperner': self.cosperner,
                'sperner_vector': list(self.sperner_vector) if self.sperner_vector is not None else None}
        if self.sperner_vector_reason:
            data['sperner_vector_reason'] = self.sperner_vector_reason
        else:
            data['note'] = SI_SUBSTITUTION_NOTE
        return data


@dataclass
class LefschetzVerdict:
    property: str
    status: str
    witness: Optional[LinearForm] = None
    certificate: Optional[Dict[str, Any]] = None
    trials: int = 0
    candidates_tried: int = 0
    per_degree_report: List[Dict[str, Any]] = field(default_factory=list)
    modular: Optional[int] = None
    # 零代数上性质空真成立，status 仍为 witness，但没有 witness 线性型
    vacuous: bool = False

    @property
    def is_witness(self) -> bool:
        return self.status == WITNESS

    def to_dict(self, variables=None) -> Dict[str, Any]:
        data: Dict[str, Any] = {'property': self.property, 'status': self.status}
        if self.vacuous:
            data['vacuous'] = True
            data['note'] = "zero algebra: the property holds vacuously and there is no witness form"
        if self.witness is not None:
            data['witness'] = (self.witness.describe(variables) if variables is not None
                               else [format_scalar(c) for c in self.witness.coefficients])
        if self.certificate is not None:
            data['certificate'] = self.certificate
        if self.status == NO_WITNESS_FOUND:
            data['trials'] = self.trials
        data['candidates_tried'] = self.candidates_tried
        if self.per_degree_report:
            data['per_degree'] = self.per_degree_report
        if self.modular is not None:
            data['heuristic_modulus'] = self.modular
            data['note'] = "ranks computed mod p; witnesses re-verified over the rationals"
        return data


# ---------------------------------------------------------------- Sperner 数据

def sperner_vector_of(h: List[int]) -> Tuple[int, ...]:
    """SP_k = Σ_i max(h_i - h_{i-k}, 0)，k = 1..c"""
    c = len(h) - 1
    out = []
    for k in range(1, c + 1):
        out.append(sum(max(h[i] - (h[i - k] if i - k >= 0 else 0), 0) for i in range(len(h))))
    return tuple(out)


def stats(a: AlgebraLike) -> LefschetzStats:
    h = a.hilbert.to_vector()
    if not h:
        return LefschetzStats(0, 0, (), None)
    sperner = max(h)
    cosperner = sum(min(h[i], h[i + 1]) for i in range(len(h) - 1))
    if a.hilbert.is_unimodal() and a.hilbert.is_symmetric():
        return LefschetzStats(sperner, cosperner, sperner_vector_of(h))
    reason = 'hilbert function is not symmetric' if not a.hilbert.is_symmetric() else \
        'hilbert function is not unimodal'
    return LefschetzStats(sperner, cosperner, None, reason)


# ---------------------------------------------------------------- 结构证书

def structural_certificate(a: AlgebraLike, prop: str) -> Optional[Dict[str, Any]]:
    """
    对所有 g 都成立的否定证书

    (a) SLP 且 dim A_i != dim A_{c-i}
    (b) 次数 i 的 socle 元素被整个 A_1 零化，而此处要求单射：
        WLP 时 i < c 且 dim A_i <= dim A_{i+1}；SLP 时 2i < c
    """
    if a.is_zero:
        return None
    c = a.socle_degree
    if prop == SLP:
        for i in range(c // 2 + 1):
            if a.dim_at(i) != a.dim_at(c - i):
                return {'kind': 'asymmetric_hilbert', 'degree': i,
                        'dim_low': a.dim_at(i), 'dim_high': a.dim_at(c - i)}
    for d, vectors in sorted(socle(a).items()):
        if d >= c:
            continue
        forced = (a.dim_at(d) <= a.dim_at(d + 1)) if prop == WLP else (2 * d < c)
        if forced:
            vec = vectors[0]
            return {'kind': 'socle_obstruction', 'degree': d,
                    'element': str(a.polynomial_of(d, vec)),
                    'coordinates': [format_scalar(x) for x in vec]}
    return None


# ---------------------------------------------------------------- 定义层面检查

def _wlp_ranks(a, g: LinearForm, modulus: Optional[int]) -> List[Dict[str, Any]]:
    report = []
    for i in range(a.socle_degree):
        src, dst = a.dim_at(i), a.dim_at(i + 1)
        r = matrix_rank(a.linear_map(g, i), modulus)
        required = 'injective' if src < dst else ('surjective' if src > dst else 'bijective')
        report.append({'degree': i, 'source_dim': src, 'target_dim': dst, 'rank': r,
                       'required': required, 'ok': r == min(src, dst)})
    return report


def check_wlp(a: AlgebraLike, g: LinearForm, modulus: Optional[int] = None) -> LefschetzVerdict:
    """对每个 i，×g: A_i -> A_{i+1} 单射或满射"""
    if a.is_zero:
        return LefschetzVerdict(WLP, WITNESS, witness=g, candidates_tried=1)
    report = _wlp_ranks(a, g, modulus)
    ok = all(row['ok'] for row in report)
    total = sum(row['rank'] for row in report)
    st = stats(a)
    quotient = a.dim - total
    # dim A/gA ≥ Sperner，且 witness ⇔ rank = CoSperner ⇔ dim A/gA = Sperner
    if quotient < st.sperner:
        raise InternalConsistencyError(f"dim A/gA = {quotient} below Sperner number {st.sperner}")
    if ok != (total == st.cosperner) or ok != (quotient == st.sperner):
        raise InternalConsistencyError("WLP definition disagrees with the CoSperner rank criterion")
    if ok:
        return LefschetzVerdict(WLP, WITNESS, witness=g, candidates_tried=1,
                                per_degree_report=report, modular=modulus)
    cert = structural_certificate(a, WLP)
    status = DEFINITELY_NO if cert else NO_WITNESS_FOUND
    return LefschetzVerdict(WLP, status, certificate=cert, trials=1, candidates_tried=1,
                            per_degree_report=report, modular=modulus)


def _slp_ranks(a, g: LinearForm, modulus: Optional[int]) -> List[Dict[str, Any]]:
    c = a.socle_degree
    report = []
    for i in range(c // 2 + 1):
        k = c - 2 * i
        src, dst = a.dim_at(i), a.dim_at(c - i)
        r = matrix_rank(a.power_map(g, k, i), modulus)
        report.append({'degree': i, 'power': k, 'source_dim': src, 'target_dim': dst, 'rank': r,
                       'required': 'bijective', 'ok': src == dst and r == src})
    return report


def slp_rank_criterion(a: AlgebraLike, g: LinearForm, modulus: Optional[int] = None) -> Optional[bool]:
    """rank(×g^k) = dim A - SP_k 对全部 k 成立；SP 无定义时返回 None"""
    st = stats(a)
    if st.sperner_vector is None:
        return None
    holds = True
    for k, sp in enumerate(st.sperner_vector, start=1):
        r = rank_of_power(a, g, k, modulus).total
        if r > a.dim - sp:
            raise InternalConsistencyError(f"rank(×g^{k}) = {r} exceeds dim A - SP_{k} = {a.dim - sp}")
        if r != a.dim - sp:
            holds = False
    return holds


def check_slp(a: AlgebraLike, g: LinearForm, modulus: Optional[int] = None) -> LefschetzVerdict:
    """对每个 i ≤ c/2，×g^{c-2i}: A_i -> A_{c-i} 双射"""
    if a.is_zero:
        return LefschetzVerdict(SLP, WITNESS, witness=g, candidates_tried=1)
    cert = structural_certificate(a, SLP)
    if cert and cert['kind'] == 'asymmetric_hilbert':
        return LefschetzVerdict(SLP, DEFINITELY_NO, certificate=cert, candidates_tried=1, modular=modulus)
    report = _slp_ranks(a, g, modulus)
    ok = all(row['ok'] for row in report)
    criterion = slp_rank_criterion(a, g, modulus)
    if criterion is not None and criterion != ok:
        raise InternalConsistencyError("SLP definition disagrees with the Sperner-vector rank criterion")
    if ok:
        return LefschetzVerdict(SLP, WITNESS, witness=g, candidates_tried=1,
                                per_degree_report=report, modular=modulus)
    status = DEFINITELY_NO if cert else NO_WITNESS_FOUND
    return LefschetzVerdict(SLP, status, certificate=cert, trials=1, candidates_tried=1,
                            per_degree_report=report, modular=modulus)


def check_property(a: AlgebraLike, g: LinearForm, prop: str, modulus: Optional[int] = None) -> LefschetzVerdict:
    return check_wlp(a, g, modulus) if prop == WLP else check_slp(a, g, modulus)


# ---------------------------------------------------------------- 搜索

def candidate_forms(n: int, params: SearchParams) -> Iterator[LinearForm]:
    """固定顺序：各变量、全 1 型、再 trials 个带种子的随机整数向量"""
    for i in range(n):
        yield LinearForm.variable(n, i)
    yield LinearForm.ones(n)
    rng = random.Random(params.seed)
    for _ in range(params.trials):
        yield LinearForm(tuple(rng.randint(1, params.coeff_bound) for _ in range(n)))


def find_witness(a: AlgebraLike, prop: str, params: Optional[SearchParams] = None) -> LefschetzVerdict:
    """
    按 candidate_forms 的顺序检查候选线性型。
    零代数返回 vacuous 的 witness 结论（witness 为 None）；
    模 p 模式下某个候选约化时分母被 p 整除，则跳过该候选
    """
    params = params or SearchParams()
    if params.trials < 1:
        raise ValueError("trials must be >= 1")
    if a.is_zero:
        return LefschetzVerdict(prop, WITNESS, witness=None, candidates_tried=0, vacuous=True)
    cert = structural_certificate(a, prop)
    if cert is not None:
        logger.info(f"{prop}: structural obstruction ({cert['kind']}) in degree {cert['degree']}")
        return LefschetzVerdict(prop, DEFINITELY_NO, certificate=cert, candidates_tried=0)
    tried = 0
    for g in candidate_forms(a.n, params):
        tried += 1
        try:
            verdict = check_property(a, g, prop, params.modulus)
        except DenominatorDivisibleByP as e:
            logger.warning(f"{prop}: candidate {tried} skipped, {e.message}")
            continue
        if verdict.is_witness:
            if params.modulus is not None:
                # 模 p 结果不能直接升级为 witness
                verdict = check_property(a, g, prop, None)
                if not verdict.is_witness:
                    continue
                verdict.modular = params.modulus
            verdict.candidates_tried = tried
            logger.info(f"{prop} witness found after {tried} candidate(s)")
            return verdict
    logger.info(f"{prop}: no witness among {tried} candidates")
    return LefschetzVerdict(prop, NO_WITNESS_FOUND, trials=params.trials, candidates_tried=tried,
                            modular=params.modulus)


# ---------------------------------------------------------------- 判据与不等式

def sperner_bounds(a: AlgebraLike, f: Polynomial) -> Dict[str, Any]:
    """
    g 线性：dim A/gA ≥ Sperner(A)，rank(×g) ≤ CoSperner(A)
    f 为 k 次齐次且 SP 有定义：dim A/fA ≥ SP_k，rank(×f) ≤ dim A - SP_k
    """
    if a.is_zero:
        return {'checked': False}
    k = f.homogeneous_degree
    r = sum(rank(a.mult_matrix(f, i)) for i in a.degrees()) if not f.is_zero() else 0
    st = stats(a)
    result: Dict[str, Any] = {'degree': k, 'rank': r, 'quotient_dim': a.dim - r}
    if k == 1:
        result['sperner'] = st.sperner
        result['cosperner'] = st.cosperner
        if a.dim - r < st.sperner or r > st.cosperner:
            raise InternalConsistencyError(f"Sperner bound violated for {f}: rank {r}")
    if st.sperner_vector is not None and k is not None and 1 <= k <= len(st.sperner_vector):
        sp = st.sperner_vector[k - 1]
        result['sp_k'] = sp
        if a.dim - r < sp:
            raise InternalConsistencyError(f"dim A/fA = {a.dim - r} below SP_{k} = {sp}")
    result['checked'] = True
    return result


def perturbation_stability(a: AlgebraLike, g: LinearForm, prop: str, samples: int = 10,
                           seed: int = 0) -> Fraction:
    """g + ε·h 仍为 witness 的比例（ε 为小有理数，h 随机）"""
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples):
        h = LinearForm(tuple(rng.randint(-5, 5) for _ in range(a.n)))
        eps = Fraction(1, rng.randint(1000, 1000000))
        if check_property(a, g + h.scale(eps), prop).is_witness:
            hits += 1
    return Fraction(hits, samples)


def verify_tensor_criterion(a: AlgebraLike, alpha_max: int,
                            params: Optional[SearchParams] = None) -> Dict[str, Any]:
    """
    A 有 SLP ⇔ 对所有 α，A[u]/(u^α) 有 WLP

    只检查 α = 1..alpha_max，报告与 A 的 SLP 结论是否一致
    """
    params = params or SearchParams()
    if a.is_zero:
        return {'alpha_max': alpha_max, 'slp': WITNESS, 'per_alpha': [], 'consistent': True,
                'inconclusive': False}
    if not a.hilbert.is_symmetric():
        raise NonSymmetricHilbert(f"Hilbert series {a.hilbert} is not symmetric")
    slp = find_witness(a, SLP, params)
    per_alpha = []
    for alpha in range(1, alpha_max + 1):
        extended = tensor_truncated(a, alpha)
        verdict = find_witness(extended, WLP, params)
        per_alpha.append({'alpha': alpha, 'hilbert': list(extended.hilbert.coeffs), 'wlp': verdict.status})
    all_wlp = all(row['wlp'] == WITNESS for row in per_alpha)
    any_no = any(row['wlp'] == DEFINITELY_NO for row in per_alpha)
    if slp.is_witness:
        consistent, inconclusive = not any_no, not (all_wlp or any_no)
    elif slp.status == DEFINITELY_NO:
        # 失败的 α 不超过 socle 次数 + 1；范围没覆盖到就不下结论
        covered = alpha_max > a.socle_degree
        consistent = not (all_wlp and covered)
        inconclusive = not any_no and not (all_wlp and covered)
    else:
        consistent, inconclusive = True, True
    return {'alpha_max': alpha_max, 'slp': slp.status, 'per_alpha': per_alpha,
            'consistent': consistent, 'inconclusive': inconclusive}
