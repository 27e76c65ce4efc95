"""
清单任务的注册与执行

workers > 1 时任务在工作线程上运行；结果按声明顺序放入槽位，报告顺序与完成顺序无关
"""

import threading
from typing import Any, Callable, Dict, List, Optional

from artinian import (
    apolar_algebra, build_algebra, is_gorenstein, socle_elements,
)
from assoc_graded import (
    associated_graded, gr_inequality, hilbert_triple_check, verify_remark37, verify_theorem1,
)
from errors import ManifestError
from groebner import colon_chain, is_complete_intersection, minimal_generators
from jordan_csm import (
    csm_decompose, jordan_profile, verify_cor48, verify_prop46, verify_prop66, verify_theorem2,
)
from lefschetz import SLP, WLP, SearchParams, find_witness, stats, verify_tensor_criterion
from logger import get_logger
from manifest import Manifest, TaskSpec
from poly_parser import parse
from polyring import GREVLEX, VariableSet, format_monomial

logger = get_logger(__name__)

VERIFY_BUNDLE = ['hilbert_triple', 'remark37', 'gr_inequality', 'prop46', 'theorem1', 'theorem2']
_GORENSTEIN_ONLY = {'prop46', 'theorem2', 'cor48'}


class TaskContext:
    """一个清单的共享计算状态；代数只构造一次"""

    def __init__(self, manifest: Manifest, params: SearchParams):
        self.manifest = manifest
        self.params = params
        self._algebra = None
        self._lock = threading.Lock()

    @property
    def variables(self) -> VariableSet:
        return self.manifest.variables

    @property
    def ideal(self):
        return self.manifest.ideal()

    @property
    def algebra(self):
        with self._lock:
            if self._algebra is None:
                self._algebra = build_algebra(self.manifest.ideal())
            return self._algebra

    def require_z(self, task: str):
        if self.manifest.z is None:
            raise ManifestError(f"task '{task}' needs a linear form z (manifest 'z' or --z)")
        return self.manifest.z

    def require_artinian(self, task: str):
        a = self.algebra
        if a.is_zero:
            raise ManifestError(f"task '{task}' needs a nonzero algebra; the ideal is the unit ideal")
        return a


# ---------------------------------------------------------------- 任务实现

def _hilbert(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    a = ctx.algebra
    if a.is_zero:
        return {'hilbert': [], 'dim': 0, 'zero_algebra': True}
    return {'hilbert': list(a.hilbert.coeffs), 'text': str(a.hilbert), 'dim': a.dim,
            'socle_degree': a.socle_degree, 'sigma': a.sigma, 'gorenstein': is_gorenstein(a)}


def _gb(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    ideal = ctx.ideal
    gb = ideal.groebner(GREVLEX)
    names = ctx.variables.names
    return {'order': str(GREVLEX), 'basis': [str(g) for g in gb.elements],
            'leading_monomials': [format_monomial(m, names) for m in gb.leading_monomials()],
            'minimal_generators': [list(x) for x in minimal_generators(ideal)],
            'complete_intersection': is_complete_intersection(ideal)}


def _lefschetz(prop: str) -> Callable[[TaskContext, TaskSpec], Dict[str, Any]]:
    def run(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
        a = ctx.algebra
        verdict = find_witness(a, prop, ctx.params)
        return {'stats': stats(a).to_dict(), 'verdict': verdict.to_dict(ctx.variables)}
    return run


def _stats(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    return stats(ctx.algebra).to_dict()


def _socle(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    a = ctx.require_artinian('socle')
    elements = socle_elements(a)
    return {'socle': [{'degree': d, 'element': str(f)} for d, f in elements],
            'gorenstein': is_gorenstein(a)}


def _jordan(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    z = ctx.require_z('jordan')
    return jordan_profile(ctx.require_artinian('jordan'), z, ctx.params.modulus).to_dict()


def _csm(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    z = ctx.require_z('csm')
    return csm_decompose(ctx.require_artinian('csm'), z).to_dict(ctx.variables)


def _gr(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    z = ctx.require_z('gr')
    res = associated_graded(ctx.require_artinian('gr'), z)
    verdict = find_witness(res.algebra, spec.params.get('property', SLP), ctx.params)
    return {'change': res.change.to_dict(), 'in_prime': res.in_prime.to_strings(),
            'hilbert': list(res.algebra.hilbert.coeffs), 'verdict': verdict.to_dict(ctx.variables)}


def _inprime(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    z = ctx.require_z('inprime')
    res = associated_graded(ctx.require_artinian('inprime'), z)
    return {'change': res.change.to_dict(), 'in_prime': res.in_prime.to_strings()}


def _tensor(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    alpha_max = int(spec.params.get('alpha_max', 3))
    result = verify_tensor_criterion(ctx.algebra, alpha_max, ctx.params)
    result['passed'] = result['consistent']
    return result


def _with_z(fn, name: str, needs_params: bool = False):
    def run(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
        z = ctx.require_z(name)
        a = ctx.require_artinian(name)
        return fn(a, z, ctx.params) if needs_params else fn(a, z)
    return run


def _theorem1(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    z = ctx.require_z('theorem1')
    return verify_theorem1(ctx.require_artinian('theorem1'), z, ctx.params,
                           z_samples=int(spec.params.get('z_samples', 0)))


def _hilbert_triple(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    return hilbert_triple_check(ctx.ideal, ctx.require_z('hilbert_triple'))


def _gr_inequality(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    z = ctx.require_z('gr_inequality')
    return gr_inequality(ctx.require_artinian('gr_inequality'), z,
                         samples=int(spec.params.get('samples', 3)), seed=ctx.params.seed,
                         coeff_bound=ctx.params.coeff_bound)


def _apolar(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    text = spec.params.get('form')
    if not isinstance(text, str):
        raise ManifestError("task 'apolar' needs a 'form' expression")
    names = spec.params.get('ring', list(ctx.variables.names))
    form = parse(text, VariableSet(names))
    a = apolar_algebra(form)
    return {'form': str(form), 'hilbert': list(a.hilbert.coeffs), 'annihilator': a.ideal.to_strings(),
            'slp': find_witness(a, SLP, ctx.params).to_dict(a.vars)}


def _colon_chain(ctx: TaskContext, spec: TaskSpec) -> Dict[str, Any]:
    a = ctx.require_artinian('colon_chain')
    z = ctx.require_z('colon_chain').to_polynomial(ctx.variables)
    rows = []
    for k, ideal in enumerate(colon_chain(ctx.ideal, z)):
        unit = ideal.is_unit()
        rows.append({'k': k, 'unit': unit,
                     'generators': [str(g) for g in ideal.groebner().elements],
                     'minimal_generators': [] if unit else [list(x) for x in minimal_generators(ideal)],
                     'complete_intersection': unit or is_complete_intersection(ideal)})
    return {'sigma': a.sigma, 'chain': rows}


TASKS: Dict[str, Callable[[TaskContext, TaskSpec], Dict[str, Any]]] = {
    'hilbert': _hilbert,
    'gb': _gb,
    'wlp': _lefschetz(WLP),
    'slp': _lefschetz(SLP),
    'stats': _stats,
    'socle': _socle,
    'jordan': _jordan,
    'csm': _csm,
    'gr': _gr,
    'inprime': _inprime,
    'tensor': _tensor,
    'prop46': _with_z(verify_prop46, 'prop46'),
    'prop66': _with_z(verify_prop66, 'prop66'),
    'cor48': _with_z(verify_cor48, 'cor48', needs_params=True),
    'theorem1': _theorem1,
    'theorem2': _with_z(verify_theorem2, 'theorem2', needs_params=True),
    'remark37': _with_z(verify_remark37, 'remark37'),
    'hilbert_triple': _hilbert_triple,
    'gr_inequality': _gr_inequality,
    'apolar': _apolar,
    'colon_chain': _colon_chain,
}


def default_verify_tasks(ctx: TaskContext) -> List[TaskSpec]:
    """verify 子命令的默认任务集；非 Gorenstein 代数跳过需要 Gorenstein 的项"""
    gorenstein = is_gorenstein(ctx.algebra)
    return [TaskSpec(name) for name in VERIFY_BUNDLE if gorenstein or name not in _GORENSTEIN_ONLY]


# ---------------------------------------------------------------- 执行

class TaskRunner:
    """按声明顺序收集结果的任务执行器"""

    def __init__(self, context: TaskContext, workers: int = 1):
        self.context = context
        self.workers = max(1, workers)
        self._lock = threading.Lock()

    def _run_one(self, spec: TaskSpec) -> Dict[str, Any]:
        fn = TASKS.get(spec.name)
        if fn is None:
            raise ManifestError(f"unknown task '{spec.name}'", task=spec.name)
        logger.info(f"running task {spec.name}")
        return fn(self.context, spec)

    def run(self, specs: List[TaskSpec]) -> List[Dict[str, Any]]:
        for spec in specs:
            if spec.name not in TASKS:
                raise ManifestError(f"unknown task '{spec.name}'", task=spec.name)
        slots: List[Optional[Dict[str, Any]]] = [None] * len(specs)
        failures: List[Optional[BaseException]] = [None] * len(specs)

        if self.workers == 1 or len(specs) <= 1:
            for k, spec in enumerate(specs):
                slots[k] = self._run_one(spec)
        else:
            pending = list(range(len(specs)))

            def worker():
                while True:
                    with self._lock:
                        if not pending:
                            return
                        k = pending.pop(0)
                    try:
                        slots[k] = self._run_one(specs[k])
                    except BaseException as e:  # 交回主线程按声明顺序抛出
                        failures[k] = e

            threads = [threading.Thread(target=worker, daemon=True)
                       for _ in range(min(self.workers, len(specs)))]
            for t in threads:
                t.start()
            for t in threads:
                t.join()
            for e in failures:
                if e is not None:
                    raise e
        return [{'task': spec.name, 'params': spec.params, 'result': slots[k]}
                for k, spec in enumerate(specs)]


def results_passed(results: List[Dict[str, Any]]) -> bool:
    """任一结果带 passed=False 即视为校验失败"""
    return all(r['result'].get('passed', True) for r in results if isinstance(r['result'], dict))
