"""
示例库：构造若干已知结论的实例并逐条核对

每个实例返回 {'instance', 'parameters', 'ring', 'ideal', 'z', 'facts', 'checks', 'passed'}，
facts 记录计算得到的量，checks 记录与已知结论的比对
"""

from functools import reduce
from typing import Any, Callable, Dict, List, Sequence, Tuple

from artinian import (
    HilbertSeries, LinearForm, annihilator_lift, apolar_algebra, apolar_generators, build_algebra,
    quotient_by,
)
from assoc_graded import associated_graded
from errors import ManifestError, UnknownGalleryName
from groebner import (
    IdealHandle, colon, colon_chain, ideal_equals, ideal_sum, is_complete_intersection,
    leading_term_ideal, minimal_generators,
)
from jordan_csm import (
    all_hold, annihilator_ideal, assertion, csm_decompose, find_module_witness,
    quotient_by_maximal_ideal_dim, verify_lemma62, verify_prop46, verify_prop66, verify_theorem2,
)
from lefschetz import SLP, WITNESS, WLP, SearchParams, check_property, find_witness
from logger import get_logger
from poly_parser import parse, parse_many
from polyring import Polynomial, VariableSet, complete_homogeneous, elementary_symmetric, power_sum

logger = get_logger(__name__)


def _ideal(vs: VariableSet, gens: Sequence) -> IdealHandle:
    return IdealHandle(vs, [parse(g, vs) if isinstance(g, str) else g for g in gens])


def _product(polys: Sequence[Polynomial], vs: VariableSet) -> Polynomial:
    return reduce(lambda p, q: p * q, polys, Polynomial.one(vs))


def _indexed_ring(n: int) -> VariableSet:
    return VariableSet([f"x{i}" for i in range(1, n + 1)])


def _result(name: str, parameters: Dict[str, Any], ideal: IdealHandle, z: str,
            facts: Dict[str, Any], checks: List[Dict[str, Any]]) -> Dict[str, Any]:
    passed = all_hold(checks)
    if passed:
        logger.info(f"gallery {name}: {len(checks)} checks passed")
    else:
        logger.error(f"gallery {name}: {sum(not c['holds'] for c in checks)} check(s) failed")
    return {'instance': name, 'parameters': parameters, 'ring': list(ideal.vars.names),
            'ideal': ideal.to_strings(), 'z': z, 'facts': facts, 'checks': checks, 'passed': passed}


def _witness_check(name: str, a, prop: str, params: SearchParams) -> Tuple[Dict[str, Any], Any]:
    verdict = find_witness(a, prop, params)
    return assertion(name, verdict.is_witness, status=verdict.status), verdict


# ---------------------------------------------------------------- remark-3.9

def remark_3_9(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    """A 与 Gr_(z)(A) 有 SLP，而同 Hilbert 函数的 R/In(I) 连 WLP 都没有"""
    vs = VariableSet(['x', 'y', 'z'])
    ideal = _ideal(vs, ['x^2', '(x+y)^2', '(x+y+z)^2'])
    z = LinearForm.variable(3, 2)
    a = build_algebra(ideal)
    initial = leading_term_ideal(ideal)
    graded = associated_graded(a, z)
    initial_algebra = build_algebra(initial)
    checks = [
        assertion('hilbert_1_3_3_1', a.hilbert == HilbertSeries.from_vector([1, 3, 3, 1]),
                  hilbert=list(a.hilbert.coeffs)),
        assertion('initial_ideal', ideal_equals(initial, _ideal(vs, ['x^2', 'x*y', 'x*z', 'y^3', 'y^2*z', 'z^3'])),
                  initial=initial.to_strings()),
        assertion('in_prime_ideal', ideal_equals(graded.in_prime, _ideal(
            vs, ['x^2', '2*x*y+y^2', 'x*z+y*z', 'y^3', 'y^2*z', 'z^3'])), in_prime=graded.in_prime.to_strings()),
    ]
    check, verdict_a = _witness_check('algebra_has_slp_witness', a, SLP, params)
    checks.append(check)
    check, verdict_gr = _witness_check('graded_has_slp_witness', graded.algebra, SLP, params)
    checks.append(check)
    verdict_in = find_witness(initial_algebra, SLP, params)
    kind = (verdict_in.certificate or {}).get('kind')
    checks.append(assertion('initial_algebra_slp_definitely_no',
                            verdict_in.status != WITNESS and kind == 'socle_obstruction',
                            status=verdict_in.status, certificate=kind))
    ones = LinearForm.ones(3)
    checks.append(assertion('sum_of_variables_not_wlp_on_initial',
                            not check_property(initial_algebra, ones, WLP).is_witness))
    facts = {'hilbert': list(a.hilbert.coeffs), 'initial_ideal': initial.to_strings(),
             'in_prime': graded.in_prime.to_strings(),
             'algebra_slp': verdict_a.to_dict(vs), 'graded_slp': verdict_gr.to_dict(vs),
             'initial_slp': verdict_in.to_dict(vs)}
    return _result('remark-3.9', {}, ideal, 'z', facts, checks)


# ---------------------------------------------------------------- lemma-6.1-demo

def lemma_6_1_demo(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    """J = (x^3)，g = y，d = 4：I : y^j = (J, y^{4-j})，只有一个中心单模且同构于 A/(z)"""
    vs = VariableSet(['x', 'y'])
    d = 4
    ideal = _ideal(vs, ['x^3', f'y^{d}'])
    z = LinearForm.variable(2, 1)
    y = Polynomial.variable(vs, 'y')
    a = build_algebra(ideal)
    checks = []
    for j, colon_ideal in enumerate(colon_chain(ideal, y)):
        expected = _ideal(vs, ['x^3', y ** (d - j)])
        checks.append(assertion(f'colon_y_{j}', ideal_equals(colon_ideal, expected),
                                generators=colon_ideal.to_strings()))
    dec = csm_decompose(a, z)
    mod_z = quotient_by(a, [y])
    checks.append(assertion('single_central_simple_module', dec.s == 1, s=dec.s))
    checks.append(assertion('module_is_a_mod_z', dec.s == 1 and dec.modules[0].hilbert == mod_z.hilbert,
                            module=[str(c.hilbert) for c in dec.modules], quotient=str(mod_z.hilbert)))
    facts = {'profile': dec.profile.to_dict(), 'module_hilbert': [str(c.hilbert) for c in dec.modules]}
    return _result('lemma-6.1-demo', {'d': d}, ideal, 'y', facts, checks)


# ---------------------------------------------------------------- example-6.2

def example_6_2(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    """I = (f_1, f_2, g_3^{d_3})，两个二次型加一个线性型的幂"""
    n = int(settings.get('n', 3))
    d3 = int(settings.get('d3', 3))
    if n != 3:
        raise ManifestError("example-6.2 is built for n = 3", n=n)
    vs = VariableSet(['x', 'y', 'z'])
    f1, f2, g3 = parse_many(['x^2+y*z', 'y^2+x*z', 'x+y+z'], vs)
    ideal = IdealHandle(vs, [f1, f2, g3 ** d3])
    z = LinearForm.ones(3)
    a = build_algebra(ideal)
    checks = [assertion('complete_intersection', is_complete_intersection(ideal)),
              assertion('dimension', a.dim == 4 * d3, dim=a.dim)]
    for j, colon_ideal in enumerate(colon_chain(ideal, g3)):
        checks.append(assertion(f'colon_g3_{j}', ideal_equals(colon_ideal, IdealHandle(vs, [f1, f2, g3 ** (d3 - j)]))))
    dec = csm_decompose(a, z)
    mod_z = quotient_by(a, [g3])
    checks.append(assertion('single_central_simple_module', dec.s == 1, s=dec.s))
    checks.append(assertion('module_is_a_mod_z', dec.s == 1 and dec.modules[0].hilbert == mod_z.hilbert,
                            module=[str(c.hilbert) for c in dec.modules], quotient=str(mod_z.hilbert)))
    check, verdict = _witness_check('algebra_has_slp_witness', a, SLP, params)
    checks.append(check)
    check, verdict_z = _witness_check('quotient_by_z_has_slp_witness', mod_z, SLP, params)
    checks.append(check)
    facts = {'hilbert': list(a.hilbert.coeffs), 'profile': dec.profile.to_dict(),
             'slp': verdict.to_dict(vs), 'quotient_slp': verdict_z.to_dict(vs)}
    return _result('example-6.2', {'n': n, 'd3': d3}, ideal, 'x + y + z', facts, checks)


# ---------------------------------------------------------------- example-6.4 / example-6.5

def _symmetric_generators(vs: VariableSet, r: int, s: int) -> List[Polynomial]:
    """f_i = e_i(x^r)，i < n；f_n = e_n(x^s)"""
    n = len(vs)
    return [elementary_symmetric(i, vs, power=r) for i in range(1, n)] + \
           [elementary_symmetric(n, vs, power=s)]


def _alternating_identity(vs: VariableSet) -> bool:
    """Σ_{j=0}^{n-1} (-1)^{n+1-j} x_n^j e_{n-j} = x_n^n"""
    n = len(vs)
    xn = Polynomial.variable(vs, n - 1)
    total = Polynomial.zero(vs)
    for j in range(n):
        term = xn ** j * elementary_symmetric(n - j, vs)
        total = total + term if (n + 1 - j) % 2 == 0 else total - term
    return total == xn ** n


def _example_6_4_setup(settings: Dict[str, Any]):
    n, r, s = (int(settings.get(k, v)) for k, v in (('n', 3), ('r', 2), ('s', 2)))
    if n < 2 or r < 1 or s < 1 or s % r:
        raise ManifestError("example-6.4 needs n >= 2 and s a positive multiple of r", n=n, r=r, s=s)
    vs = _indexed_ring(n)
    gens = _symmetric_generators(vs, r, s)
    xn = Polynomial.variable(vs, n - 1)
    rewritten = IdealHandle(vs, gens[:-1] + [xn ** (s * n)])
    return n, r, s, vs, gens, xn, rewritten


def example_6_4(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    n, r, s, vs, gens, xn, rewritten = _example_6_4_setup(settings)
    original = IdealHandle(vs, gens)
    z = LinearForm.variable(n, n - 1)
    checks = [assertion('alternating_identity', _alternating_identity(vs)),
              assertion('ideal_rewrite', ideal_equals(original, rewritten),
                        rewritten=rewritten.to_strings())]
    a = build_algebra(rewritten)
    dec = csm_decompose(a, z)
    sub = VariableSet(vs.names[:-1])
    presentation = build_algebra(IdealHandle(sub, [elementary_symmetric(i, sub, power=r) for i in range(1, n)]))
    mod_z = quotient_by(a, [xn])
    checks.append(assertion('single_central_simple_module', dec.s == 1, s=dec.s))
    checks.append(assertion('profile', list(dec.profile.blocks) == [(s * n, presentation.dim)],
                            blocks=[list(b) for b in dec.profile.blocks]))
    checks.append(assertion('module_matches_presentation',
                            dec.s == 1 and dec.modules[0].hilbert == presentation.hilbert == mod_z.hilbert,
                            module=[str(c.hilbert) for c in dec.modules], presentation=str(presentation.hilbert)))
    check, verdict = _witness_check('algebra_has_slp_witness', a, SLP, params)
    checks.append(check)
    facts = {'dim': a.dim, 'hilbert': list(a.hilbert.coeffs), 'profile': dec.profile.to_dict(),
             'slp': verdict.to_dict(vs)}
    return _result('example-6.4', {'n': n, 'r': r, 's': s}, rewritten, vs.names[-1], facts, checks)


def example_6_5(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    """A/0:z^k ≅ R/(f_1, ..., f_{n-1}, x_n^{sn-k})，对每个 1 <= k < sn 都有 SLP"""
    n, r, s, vs, gens, xn, rewritten = _example_6_4_setup(settings)
    chain = colon_chain(rewritten, xn)
    checks = [assertion('chain_length', len(chain) == s * n + 1, length=len(chain))]
    quotients = []
    for k in range(1, min(len(chain), s * n)):
        expected = IdealHandle(vs, gens[:-1] + [xn ** (s * n - k)])
        checks.append(assertion(f'colon_{k}', ideal_equals(chain[k], expected)))
        quotient = build_algebra(chain[k])
        check, verdict = _witness_check(f'quotient_{k}_has_slp_witness', quotient, SLP, params)
        checks.append(check)
        quotients.append({'k': k, 'hilbert': list(quotient.hilbert.coeffs), 'slp': verdict.status})
    facts = {'quotients': quotients}
    return _result('example-6.5', {'n': n, 'r': r, 's': s}, rewritten, vs.names[-1], facts, checks)


# ---------------------------------------------------------------- example-6.8

def example_6_8(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    """s < r：两个中心单模，各自是 n-1 元完全交（差一个次数平移）"""
    n, r, s = (int(settings.get(k, v)) for k, v in (('n', 3), ('r', 3), ('s', 1)))
    if n < 3 or not 1 <= s < r:
        raise ManifestError("example-6.8 needs n >= 3 and 1 <= s < r", n=n, r=r, s=s)
    vs = _indexed_ring(n)
    gens = _symmetric_generators(vs, r, s)
    ideal = IdealHandle(vs, gens)
    xn = Polynomial.variable(vs, n - 1)
    z = LinearForm.variable(n, n - 1)
    head = _product([Polynomial.variable(vs, i) for i in range(n - 1)], vs)
    top = (n - 1) * r + s

    checks = [assertion('complete_intersection', is_complete_intersection(ideal))]
    chain = colon_chain(ideal, xn)
    for k in range(top + 2):
        if k <= s:
            expected = IdealHandle(vs, gens[:n - 1] + [head ** s * xn ** (s - k)])
        elif k < top:
            expected = IdealHandle(vs, gens[:n - 2] + [xn ** ((n - 1) * r - (k - s)), head ** s])
        else:
            expected = IdealHandle.unit(vs)
        checks.append(assertion(f'colon_formula_{k}', ideal_equals(chain[min(k, len(chain) - 1)], expected)))

    a = build_algebra(ideal)
    dec = csm_decompose(a, z)
    sub = VariableSet(vs.names[:-1])
    sub_head = head.restrict(sub)
    bars = [g.restrict(sub) for g in gens[:n - 2]]
    presentations = [IdealHandle(sub, bars + [sub_head ** s]), IdealHandle(sub, bars + [sub_head ** (r - s)])]
    algebras = [build_algebra(p) for p in presentations]
    checks.append(assertion('two_central_simple_modules', dec.s == 2, s=dec.s))
    checks.append(assertion('profile', list(dec.profile.blocks) == [(top, algebras[0].dim), (s, algebras[1].dim)],
                            blocks=[list(b) for b in dec.profile.blocks]))
    shifts = []
    for c, presentation, pa in zip(dec.modules, presentations, algebras):
        shift = c.hilbert.start - pa.hilbert.start
        shifts.append(shift)
        checks.append(assertion(f'U_{c.index}_hilbert_matches_presentation', c.hilbert == pa.hilbert.shift(shift),
                                module=str(c.hilbert), presentation=str(pa.hilbert), shift=shift))
        lifted = IdealHandle(vs, [g.embed(vs) for g in presentation.generators] + [xn])
        checks.append(assertion(f'U_{c.index}_annihilator', ideal_equals(annihilator_ideal(c.module), lifted)))
    if len(shifts) == 2:
        checks.append(assertion('shifts', shifts == [0, s * (n - 1)], shifts=shifts))

    prop66 = verify_prop66(a, z)
    checks.extend(prop66['checks'])
    check, verdict = _witness_check('algebra_has_slp_witness', a, SLP, params)
    checks.append(check)
    facts = {'dim': a.dim, 'socle_degree': a.socle_degree, 'profile': dec.profile.to_dict(),
             'module_hilbert': [str(c.hilbert) for c in dec.modules], 'shifts': shifts,
             'slp': verdict.to_dict(vs)}
    return _result('example-6.8', {'n': n, 'r': r, 's': s}, ideal, vs.names[-1], facts, checks)


# ---------------------------------------------------------------- example-6.9

def example_6_9(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    """I = (p_a, p_{a+1}, p_{a+2})：colon 链为完全交、完全交、单位理想"""
    a_exp = int(settings.get('example_6_9_a', 2))
    if a_exp < 1:
        raise ManifestError("example-6.9 needs a >= 1", a=a_exp)
    vs = VariableSet(['x', 'y', 'z'])
    x, y, z_var = (Polynomial.variable(vs, name) for name in ('x', 'y', 'z'))
    p = {d: power_sum(d, vs) for d in (a_exp, a_exp + 1, a_exp + 2)}
    ideal = IdealHandle(vs, [p[a_exp], p[a_exp + 1], p[a_exp + 2]])
    f = (x - z_var) * (y - z_var)
    fp = 2 * z_var - x - y
    za = z_var ** a_exp
    h = complete_homogeneous(a_exp - 1, vs, ['x', 'z']) + complete_homogeneous(a_exp - 1, vs, ['y', 'z'])

    relation1 = za * f - x * y * p[a_exp] + (x + y) * p[a_exp + 1] - p[a_exp + 2]
    relation2 = 2 * za * fp - h * f + (x + y - z_var) * p[a_exp] - p[a_exp + 1]
    checks = [assertion('relation_1', relation1.is_zero(), remainder=str(relation1)),
              assertion('relation_2', relation2.is_zero(), remainder=str(relation2)),
              assertion('complete_intersection', is_complete_intersection(ideal)),
              assertion('ideal_rewrite', ideal_equals(ideal, IdealHandle(vs, [p[a_exp], p[a_exp + 1], za * f])))]

    chain = colon_chain(ideal, z_var)
    checks.append(assertion('chain_length', len(chain) == 3 * a_exp + 1, length=len(chain)))
    if len(chain) == 3 * a_exp + 1:
        once, twice = chain[a_exp], chain[2 * a_exp]
        checks.append(assertion('colon_a', ideal_equals(once, IdealHandle(vs, [f, p[a_exp], p[a_exp + 1]]))))
        checks.append(assertion('colon_a_alt', ideal_equals(once, IdealHandle(vs, [f, p[a_exp], fp * za]))))
        checks.append(assertion('colon_2a', ideal_equals(twice, IdealHandle(vs, [fp, f, p[a_exp]]))))
        checks.append(assertion('colon_2a_alt', ideal_equals(twice, IdealHandle(vs, [fp, f, za]))))
        checks.append(assertion('colon_3a_unit', chain[3 * a_exp].is_unit()))
        for m in range(1, 3 * a_exp):
            checks.append(assertion(f'colon_{m}_complete_intersection', is_complete_intersection(chain[m]),
                                    minimal_generators=[list(g) for g in minimal_generators(chain[m])]))

    a = build_algebra(ideal)
    z = LinearForm.variable(3, 2)
    prop66 = verify_prop66(a, z)
    checks.extend(prop66['checks'])
    checks.extend(verify_lemma62(ideal, z_var)['checks'])
    theorem2 = verify_theorem2(a, z, params)
    checks.extend(theorem2['checks'])
    check, verdict = _witness_check('algebra_has_slp_witness', a, SLP, params)
    checks.append(check)
    facts = {'dim': a.dim, 'hilbert': list(a.hilbert.coeffs), 'colon_chain': prop66['colon_chain'],
             'module_hilbert': prop66['module_hilbert'],
             'per_module_witness': theorem2['per_module_witness'], 'slp': verdict.to_dict(vs)}
    return _result('example-6.9', {'a': a_exp}, ideal, 'z', facts, checks)


# ---------------------------------------------------------------- example-6.10

EXAMPLE_6_10_P = 'u^2*w*x + u*v*w*y + v^2*x*y'
EXAMPLE_6_10_F = 'w*u^2 + 2*x*u*v + y*v^2'


def example_6_10_ideal() -> Tuple[IdealHandle, Polynomial]:
    """I = (y^2, x^2, w^2, v^3, u^3, z^5 - z p)，返回 (I, p)"""
    vs = VariableSet(['u', 'v', 'w', 'x', 'y', 'z'])
    p = parse(EXAMPLE_6_10_P, vs)
    z_var = Polynomial.variable(vs, 'z')
    return _ideal(vs, ['y^2', 'x^2', 'w^2', 'v^3', 'u^3', z_var ** 5 - z_var * p]), p


def example_6_10_presentations(ideal: IdealHandle, p: Polynomial) -> Tuple[List[Dict[str, Any]], Any]:
    """R/(I:z) 的表示，以及 p̄ 在 A/(z) 中的零化子 = Ann(F) + (z)；不需要构造 A 本身"""
    vs = ideal.vars
    z_var = Polynomial.variable(vs, 'z')
    colon_z = colon(ideal, z_var)
    checks = [assertion('colon_z', ideal_equals(colon_z, _ideal(
        vs, ['y^2', 'x^2', 'w^2', 'v^3', 'u^3', z_var ** 4 - p])))]

    form = parse(EXAMPLE_6_10_F, VariableSet(['u', 'v', 'w', 'x', 'y']))
    apolar = apolar_algebra(form)
    lifted = IdealHandle(vs, [g.embed(vs) for g in apolar_generators(form)] + [z_var])
    mod_z = ideal_sum(ideal, IdealHandle(vs, [z_var]))
    by_elimination = colon(mod_z, p)
    checks.append(assertion('p_annihilator_is_apolar', ideal_equals(by_elimination, lifted)))
    by_kernel = annihilator_lift(build_algebra(mod_z), p)
    checks.append(assertion('p_annihilator_by_kernel', ideal_equals(by_kernel, by_elimination)))
    return checks, apolar


def example_6_10(settings: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    """A 有 SLP，但第三个中心单模 U_3 ≅ (R/Ann(F))(-4) 没有"""
    ideal, p = example_6_10_ideal()
    vs = ideal.vars
    z = LinearForm.variable(6, 5)
    a = build_algebra(ideal)
    checks = [assertion('dimension', a.dim == 360, dim=a.dim)]

    dec = csm_decompose(a, z)
    checks.append(assertion('profile', list(dec.profile.blocks) == [(9, 12), (5, 48), (1, 12)],
                            blocks=[list(b) for b in dec.profile.blocks]))
    expected = [HilbertSeries.from_vector([1, 5, 5, 1]),
                HilbertSeries.from_vector([7, 17, 17, 7], offset=2),
                HilbertSeries.from_vector([1, 5, 5, 1], offset=4)]
    checks.append(assertion('module_hilbert', [c.hilbert for c in dec.modules] == expected,
                            module_hilbert=[str(c.hilbert) for c in dec.modules]))
    prop46 = verify_prop46(a, z)
    checks.extend(prop46['checks'])

    presentation_checks, apolar = example_6_10_presentations(ideal, p)
    checks.extend(presentation_checks)
    u3 = dec.modules[2].module if dec.s == 3 else None
    if u3 is not None:
        checks.append(assertion('U_3_matches_apolar_algebra', dec.modules[2].hilbert == apolar.hilbert.shift(4),
                                apolar=list(apolar.hilbert.coeffs)))
        top = quotient_by_maximal_ideal_dim(u3)
        checks.append(assertion('U_3_principal', top == 1, dim_u_over_mu=top))
        trials = int(settings.get('module_trials', 16))
        module_verdict = find_module_witness(u3, SLP, params.with_trials(trials))
        checks.append(assertion('U_3_no_module_slp_witness', module_verdict.status != WITNESS,
                                status=module_verdict.status, trials=trials))
    check, verdict = _witness_check('algebra_has_slp_witness', a, SLP, params)
    checks.append(check)
    facts = {'dim': a.dim, 'socle_degree': a.socle_degree, 'profile': dec.profile.to_dict(),
             'module_hilbert': [str(c.hilbert) for c in dec.modules],
             'apolar_hilbert': list(apolar.hilbert.coeffs), 'slp': verdict.to_dict(vs)}
    return _result('example-6.10', {'p': EXAMPLE_6_10_P}, ideal, 'z', facts, checks)


GALLERY: Dict[str, Tuple[Callable[[Dict[str, Any], SearchParams], Dict[str, Any]], str]] = {
    'remark-3.9': (remark_3_9, "A and Gr have the SLP while R/In(I) fails even the WLP"),
    'lemma-6.1-demo': (lemma_6_1_demo, "(x^3, y^4) with z = y has a single central simple module"),
    'example-6.2': (example_6_2, "(f_1, f_2, g_3^d3) complete intersection with the SLP"),
    'example-6.4': (example_6_4, "symmetric-function complete intersection, s a multiple of r"),
    'example-6.5': (example_6_5, "A/0:z^k for the example-6.4 instance, each with the SLP"),
    'example-6.8': (example_6_8, "symmetric-function complete intersection, s < r, two modules"),
    'example-6.9': (example_6_9, "power sums (p_a, p_a+1, p_a+2)"),
    'example-6.10': (example_6_10, "A has the SLP but U_3 does not"),
}
GALLERY_NAMES = list(GALLERY)

_SETTINGS_KEYS = {
    'example-6.2': 'example_6_2',
    'example-6.4': 'example_6_4',
    'example-6.5': 'example_6_4',
    'example-6.8': 'example_6_8',
}


def gallery_listing() -> List[Dict[str, str]]:
    return [{'name': name, 'description': description} for name, (_, description) in GALLERY.items()]


def run_gallery(name: str, gallery_config: Dict[str, Any], params: SearchParams) -> Dict[str, Any]:
    if name not in GALLERY:
        raise UnknownGalleryName(f"unknown gallery instance '{name}'", name=name, known=", ".join(GALLERY_NAMES))
    fn, _ = GALLERY[name]
    settings = dict(gallery_config.get(_SETTINGS_KEYS.get(name), {}) or {})
    for key in ('example_6_9_a', 'module_trials'):
        if key in gallery_config:
            settings.setdefault(key, gallery_config[key])
    logger.info(f"gallery {name} with {settings or 'defaults'}")
    return fn(settings, params)
