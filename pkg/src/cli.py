"""
命令行入口

  hilbert | gb | wlp | slp | jordan | csm | gr | inprime   单项计算
  verify                                                   校验任务集
  gallery NAME | gallery --list                            示例库

退出码：0 成功，1 校验失败，2 输入错误，3 结构前提不满足
"""

import argparse
from typing import Any, Dict, List, Optional, Sequence

from config import Config, TOOL_NAME, TOOL_VERSION
from errors import ManifestError, ToolkitError
from gallery import gallery_listing, run_gallery
from lefschetz import SearchParams
from logger import get_logger, setup_logging_from_config
from manifest import Manifest, TaskSpec
from report_publisher import ReportPublisher, TimingProbe, build_report
from tasks import TaskContext, TaskRunner, default_verify_tasks, results_passed

SINGLE_TASK_COMMANDS = ['hilbert', 'gb', 'wlp', 'slp', 'jordan', 'csm', 'gr', 'inprime']

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', '-i', help='清单文件（JSON）')
    common.add_argument('--z', help='线性型 z，覆盖清单中的值')
    common.add_argument('--seed', type=int, help='随机搜索种子')
    common.add_argument('--trials', type=int, help='候选线性型个数')
    common.add_argument('--bound', type=int, help='随机系数上界')
    common.add_argument('--mod', type=int, help='用素数域秩做启发式计算（witness 仍在有理数上复核）')
    common.add_argument('--task', help='只运行指定任务')
    common.add_argument('--config', '-c', help='配置文件路径')
    common.add_argument('--output', '-o', help='报告输出文件（缺省写 stdout）')
    common.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='日志级别')
    common.add_argument('--workers', type=int, help='并行任务线程数')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(prog=TOOL_NAME, description='Lefschetz properties of graded Artinian algebras')
    parser.add_argument('--version', action='version', version=f'{TOOL_NAME} {TOOL_VERSION}')
    sub = parser.add_subparsers(dest='command', required=True)
    for name in SINGLE_TASK_COMMANDS:
        sub.add_parser(name, parents=[common], help=f'run the {name} task')
    sub.add_parser('verify', parents=[common], help='run the verification bundle')
    gallery = sub.add_parser('gallery', parents=[common], help='reproduce a worked example')
    gallery.add_argument('name', nargs='?', help='instance name')
    gallery.add_argument('--list', action='store_true', help='list instance names')
    return parser


def load_config(args) -> Config:
    config = Config.from_file(args.config) if args.config else Config.from_env()
    config = config.copy()
    if args.log_level:
        config.data.setdefault('logging', {})['level'] = args.log_level
    if args.workers is not None:
        config.data.setdefault('runner', {})['workers'] = args.workers
    if args.output:
        config.data.setdefault('output', {}).update({'type': 'file', 'file_path': args.output})
    if args.mod is not None:
        config.data.setdefault('linalg', {})['modulus'] = args.mod
    return config


def search_params(config: Config, args, manifest: Optional[Manifest] = None) -> SearchParams:
    """配置 < 清单 < 命令行"""
    params = SearchParams.from_config(config)
    values = {'seed': params.seed, 'trials': params.trials, 'coeff_bound': params.coeff_bound}
    if manifest is not None:
        for key in values:
            if getattr(manifest, key) is not None:
                values[key] = getattr(manifest, key)
    for key, flag in (('seed', args.seed), ('trials', args.trials), ('coeff_bound', args.bound)):
        if flag is not None:
            values[key] = flag
    if values['trials'] < 1 or values['coeff_bound'] < 1:
        raise ManifestError("trials and coefficient bound must be positive", **values)
    return SearchParams(values['trials'], values['seed'], values['coeff_bound'], params.modulus)


def _selected_tasks(args, manifest: Manifest, context: TaskContext) -> List[TaskSpec]:
    if args.task:
        declared = [t for t in manifest.tasks if t.name == args.task]
        return declared[:1] or [TaskSpec(args.task)]
    if args.command == 'verify':
        return manifest.tasks or default_verify_tasks(context)
    return [TaskSpec(args.command)]


def _run_gallery(args, config: Config, params: SearchParams) -> Dict[str, Any]:
    if args.list:
        return build_report({'gallery': 'list'}, [{'task': 'gallery', 'params': {}, 'result': gallery_listing()}],
                            True)
    if not args.name:
        raise ManifestError("gallery needs an instance name or --list")
    result = run_gallery(args.name, config.gallery, params)
    return build_report({'gallery': args.name}, [{'task': 'gallery', 'params': result['parameters'],
                                                  'result': result}], result['passed'])


def _run_manifest(args, config: Config) -> Dict[str, Any]:
    if not args.input:
        raise ManifestError(f"'{args.command}' needs --input")
    manifest = Manifest.from_file(args.input)
    if args.z:
        manifest.set_z(args.z)
    context = TaskContext(manifest, search_params(config, args, manifest))
    specs = _selected_tasks(args, manifest, context)
    runner = TaskRunner(context, int(config.runner.get('workers', 1)))
    results = runner.run(specs)
    return build_report(manifest.echo(), results, results_passed(results))


def _error_report(error: ToolkitError) -> Dict[str, Any]:
    return {'tool': TOOL_NAME, 'version': TOOL_VERSION, 'error': error.to_dict()}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT

    logger = get_logger(__name__)
    try:
        config = load_config(args)
    except (OSError, ValueError) as e:
        logger.error(f"配置加载失败: {e}")
        return EXIT_INPUT
    if not config.validate():
        logger.error("配置验证失败")
        return EXIT_INPUT
    setup_logging_from_config(config.data)
    logger = get_logger(__name__)
    publisher = ReportPublisher(config.output)
    probe = TimingProbe() if config.output.get('include_timing') else None

    try:
        if args.command == 'gallery':
            report = _run_gallery(args, config, search_params(config, args))
        else:
            report = _run_manifest(args, config)
    except ToolkitError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        publisher.publish(_error_report(e))
        return e.exit_code

    if probe is not None:
        report['timing'] = probe.to_dict()
    publisher.publish(report)
    if not report['passed']:
        logger.error("verification failed")
        return EXIT_FAILED
    return EXIT_OK
