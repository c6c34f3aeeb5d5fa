"""
One runner per subcommand. Every runner takes the validated config, the
effective tolerances, a seeded generator and an optional output directory,
and returns a :class:`Report`; failures of checks are report entries.
"""
import logging
import pathlib
import time
from typing import Callable, Dict, Optional

import numpy as np
import scipy.linalg

from .. import folired, ppsm, relational
from ..polyspace import PolyForm, Subspace, classify, scan_poly_lagrangian
from ..ppsm.pairing import HAMILTONIAN_PROBES
from ..structures import (
    Constructor,
    FoliationVariant,
    LieAlgebraData,
    PolyPoissonStructure,
    build,
    check_axioms,
    check_derivatives,
)
from ..structures.registry import algebra_from_params
from ..utils import exceptions
from ..utils.checks import CheckResult
from ..utils.tolerances import Tolerances
from .config import Command, ScenarioConfig
from .report import Report, write_path_table

log = logging.getLogger(__name__)

#: constant-λ oracles (matrix exponentials)
ORACLE_TOL = 1e-8
#: drift of X(0), X(1) under the gauge flow
ENDPOINT_DRIFT_TOL = 1e-6
HOLONOMY_DRIFT_TOL = ppsm.groupoid.GAUGE_INVARIANT_TOL
HAMILTONIAN_TOL = 1e-3
DEFAULT_FLOW_TIME = 0.1

PATH_FILE = 'path.txt'
PATH_TABLE = 'path.csv'
FLOWED_PATH_TABLE = 'flowed-path.csv'

REDUCTION_SCENARIOS = {
    folired.ScenarioName.COVELOCITY_TRANSLATION: folired.covelocity_translation,
    folired.ScenarioName.COVELOCITY_ROTATION: folired.covelocity_rotation,
    folired.ScenarioName.SO3_ORBITS: folired.so3_angular_momentum,
    'so3-angular-momentum': folired.so3_angular_momentum,
}
#: level points closer to the chart boundary are not used for the clean-value test
LEVEL_MARGIN = 1e-2

Runner = Callable[[ScenarioConfig, Tolerances, np.random.Generator, Optional[pathlib.Path]], Report]


def _error_check(name: str, error: exceptions.PolyGrpdError) -> CheckResult:
    return CheckResult(name, False, getattr(error, 'residual', None), getattr(error, 'tolerance', None), 1,
                       {'error': str(error), 'exception': type(error).__name__})


def _structure(config: ScenarioConfig, tolerances: Tolerances) -> PolyPoissonStructure:
    if config.structure is None:
        raise exceptions.ConfigError(f"Command {config.command!r} needs a \"structure\"")
    return build(config.structure['constructor'], config.structure.get('params', {}), config.fd_step, tolerances)


def _vector(config: ScenarioConfig, key: str, size: int, default=None) -> np.ndarray:
    value = config.params.get(key, default)
    if value is None:
        raise exceptions.ConfigError(f"Command {config.command!r} needs params.{key}")
    try:
        return np.asarray(value, dtype=float).reshape(size)
    except (TypeError, ValueError) as e:
        raise exceptions.ConfigError(f"params.{key} must be {size} numbers: {e}")


def run_check_structure(config, tolerances, rng, out) -> Report:
    structure = _structure(config, tolerances)
    report = Report(config.command, config.scenario or structure.name, config.seed)
    axioms = check_axioms(structure, config.samples, rng)
    report.extend(axioms.checks)
    if config.params.get('derivatives', False):
        started = time.perf_counter()
        check = check_derivatives(structure, min(config.samples, 20), rng)
        report.extend([check], time.perf_counter() - started)
    report.facts.update({'structure': structure.name, 'kind': structure.kind,
                         'n': structure.dim, 'r': structure.order, 'K': structure.size})
    return report


def run_classify(config, tolerances, rng, out) -> Report:
    """
    Classify a subspace of (ℝ^m, ω) and optionally scan every dimension for
    poly-Lagrangian subspaces.

    params: m, wedges, subspace (list of vectors), expect {flag: bool},
    scan (bool), expect_absent (bool)
    """
    params = config.params
    try:
        form = PolyForm.from_wedges(int(params['m']), params['wedges'])
    except (KeyError, TypeError, ValueError) as e:
        raise exceptions.ConfigError(f"classify needs params.m and params.wedges: {e}")
    report = Report(config.command, config.scenario, config.seed)
    started = time.perf_counter()

    if 'subspace' in params:
        vectors = np.asarray(params['subspace'], dtype=float).reshape(-1, form.dim).T
        try:
            flags = classify(form, Subspace(form.dim, vectors), tolerances).as_dict()
        except exceptions.DegeneratePolyForm as e:
            report.checks.append(_error_check('classification', e))
            return report
        report.facts['classification'] = flags
        expected = params.get('expect', {})
        unknown = set(expected) - set(flags)
        if unknown:
            raise exceptions.ConfigError(f"Unknown classification flags: {', '.join(sorted(unknown))}")
        for name, value in expected.items():
            report.checks.append(CheckResult.from_flag(name, flags[name] == bool(value),
                                                       expected=bool(value), actual=flags[name]))

    if params.get('scan', False):
        scan = scan_poly_lagrangian(form, rng, tolerances=tolerances)
        report.facts['scan'] = [
            {'dim': item.dim, 'impossible': item.impossible, 'tried': item.tried, 'found': item.found is not None}
            for item in scan.dimensions
        ]
        report.facts['certified_absent'] = scan.certified_absent
        if 'expect_absent' in params:
            absent = not scan.exists
            report.checks.append(CheckResult.from_flag(
                'poly_lagrangian_absent', absent == bool(params['expect_absent']), certified=scan.certified_absent,
            ))
    for check in report.checks:
        check.detail.setdefault('wall_time', time.perf_counter() - started)
    return report


def _foliation_family(config: ScenarioConfig, tolerances: Tolerances):
    """
    The S1, S2 and S3 structures over one poly-form, all foliated by the slices
    """
    params = {}
    if config.structure is not None:
        if config.structure['constructor'] != Constructor.FOLIATION_FAMILY:
            raise exceptions.ConfigError(f"Scenario {config.scenario!r} needs the "
                                         f"{Constructor.FOLIATION_FAMILY!r} constructor")
        params = dict(config.structure.get('params', {}))
    return [build(Constructor.FOLIATION_FAMILY, {**params, 'variant': variant}, config.fd_step, tolerances)
            for variant in FoliationVariant.all()]


def run_foliation(config, tolerances, rng, out) -> Report:
    """
    Leaf forms at sample points; the ``foliation-family`` scenario also
    compares the distributions of its three structures
    """
    if config.scenario == folired.ScenarioName.FOLIATION_FAMILY:
        structures = _foliation_family(config, tolerances)
    else:
        structures = [_structure(config, tolerances)]
    report = Report(config.command, config.scenario or structures[0].name, config.seed)
    started = time.perf_counter()
    points = structures[0].chart.sample(rng, config.samples)
    dims, worst, nondegenerate, errors = set(), 0.0, True, []
    spread = 0.0
    for x in points:
        for structure in structures:
            try:
                leaf = folired.leaf_two_form(structure, x)
            except exceptions.IllPosed as e:
                errors.append(f"{structure.name}: {e}")
                continue
            dims.add(leaf.dim)
            worst = max(worst, leaf.consistency_residual, leaf.skew_residual)
            nondegenerate = nondegenerate and leaf.is_nondegenerate(tolerances.rank_rtol)
        reference = folired.distribution_at(structures[0], x)
        for structure in structures[1:]:
            spread = max(spread, reference.distance(folired.distribution_at(structure, x)))
    elapsed = time.perf_counter() - started

    checks = [
        CheckResult('leaf_form', not errors, worst, tolerances.adm, config.samples, {'errors': errors[:5]}),
        CheckResult.from_flag('leaf_nondegenerate', nondegenerate, config.samples),
    ]
    if len(structures) > 1:
        checks.append(CheckResult.from_residual('same_distribution', spread, tolerances.adm, config.samples))
        report.facts['frame_sizes'] = {structure.name: structure.size for structure in structures}
    report.extend(checks, elapsed)
    report.facts['leaf_dims'] = sorted(dims)
    return report


def _reduction_scenario(config: ScenarioConfig, tolerances: Tolerances) -> folired.ReductionScenario:
    name = config.scenario
    if name == folired.ScenarioName.MW_VIOLATING:
        return folired.mw_violating_scenario(tolerances)
    if name in REDUCTION_SCENARIOS:
        return REDUCTION_SCENARIOS[name](int(config.params.get('r', 2)), config.fd_step, tolerances)
    names = sorted(REDUCTION_SCENARIOS) + [folired.ScenarioName.MW_VIOLATING]
    raise exceptions.ConfigError(f"Unknown reduction scenario {name!r}, expected one of {names}")


def run_reduce(config, tolerances, rng, out) -> Report:
    """
    Reducibility at the samples, then the MW condition and the reduced form
    at every level point reached by projecting a sample
    """
    scenario = _reduction_scenario(config, tolerances)
    structure = scenario.structure
    report = Report(config.command, config.scenario, config.seed)
    chart = structure.chart

    started = time.perf_counter()
    points = chart.sample(rng, config.samples)
    report.extend(folired.reducibility_check(structure, scenario.action, points), time.perf_counter() - started)
    report.extend([folired.equivariance_check(scenario.action, scenario.moment, points, tolerances.axiom)])

    started = time.perf_counter()
    levels = []
    for x in points:
        try:
            level = folired.project_to_level(scenario.moment, x, tolerances, chart)
        except exceptions.NotCleanValue as e:
            log.debug("Sample %s not projected: %s", x.tolist(), e)
            continue
        if chart.contains(level, LEVEL_MARGIN):
            levels.append(level)
    report.facts['level_points'] = len(levels)
    report.facts['skipped_samples'] = len(points) - len(levels)
    if not levels:
        report.checks.append(CheckResult('mw_condition', False, None, None, 0,
                                         {'error': 'no sample reached the level inside the chart'}))
        return report

    results = []
    try:
        for x in levels:
            results.append(folired.mw_condition(structure, scenario.action, scenario.moment, x, chart))
    except exceptions.ReductionError as e:
        report.checks.append(_error_check('mw_condition', e))
        return report
    report.extend([CheckResult(
        'mw_condition', all(result.holds for result in results), max(result.residual for result in results),
        tolerances.adm, len(results),
        {'kernel_dim': sorted({result.kernel_dim for result in results}),
         'isotropy_dim': sorted({result.isotropy_dim for result in results}),
         'intersection_dim': sorted({result.intersection_dim for result in results})},
    )], time.perf_counter() - started)

    if structure.form is not None:
        started = time.perf_counter()
        try:
            reduced = [folired.reduced_form_at(structure, scenario.action, scenario.moment, x) for x in levels]
        except exceptions.DegenerateReduction as e:
            report.checks.append(_error_check('reduced_form_nondegenerate', e))
        else:
            smallest = min(item.smallest_singular_value for item in reduced)
            report.extend([CheckResult(
                'reduced_form_nondegenerate', smallest > tolerances.path, smallest, tolerances.path, len(reduced),
                {'reduced_dim': sorted({item.basis.shape[1] for item in reduced})},
            )], time.perf_counter() - started)
    return report


def run_morita(config, tolerances, rng, out) -> Report:
    if config.scenario == folired.ScenarioName.MORITA_SO3:
        if config.params.get('algebra', 'so3') != 'so3':
            raise exceptions.ConfigError(f"Scenario {config.scenario!r} runs on so3 only")
        algebra = LieAlgebraData.so3()
    else:
        algebra = algebra_from_params(config.params)
    order = int(config.params.get('r', 2))
    report = Report(config.command, config.scenario or f"{algebra.name}-{order}", config.seed)
    report.extend(folired.morita_conditions_check(algebra, order, config.samples, rng, config.fd_step, tolerances))
    return report


def linear_endpoint(structure: PolyPoissonStructure, x0, coefficients) -> np.ndarray:
    """
    X(1) for constant λ on a linear structure: ζ_i ↦ exp(−ad(u_i)ᵀ) ζ_i per slot
    """
    algebra = structure.algebra
    d = algebra.dim
    slots = np.asarray(x0, dtype=float).reshape(-1, d)
    blocks = np.asarray(coefficients, dtype=float).reshape(-1, d)
    if blocks.shape[0] == 1:
        blocks = np.repeat(blocks, slots.shape[0], axis=0)
    return np.concatenate([scipy.linalg.expm(-algebra.ad(u).T) @ zeta for u, zeta in zip(blocks, slots)])


def linear_holonomy(structure: PolyPoissonStructure, coefficients) -> np.ndarray:
    """
    Holonomy of constant λ: one matrix exponential per block of the frame
    """
    algebra = structure.algebra
    blocks = np.asarray(coefficients, dtype=float).reshape(-1, algebra.dim)
    return scipy.linalg.block_diag(*[scipy.linalg.expm(algebra.matrix(u)) for u in blocks])


def _is_linear(structure: PolyPoissonStructure) -> bool:
    return (structure.kind in ppsm.groupoid.LINEAR_KINDS and structure.algebra is not None
            and structure.algebra.matrices is not None)


def run_integrate_path(config, tolerances, rng, out) -> Report:
    """
    Solve the A-path of constant λ from x0; params: x0, coefficients
    """
    structure = _structure(config, tolerances)
    x0 = _vector(config, 'x0', structure.dim)
    coefficients = _vector(config, 'coefficients', structure.size)
    report = Report(config.command, config.scenario or structure.name, config.seed)

    started = time.perf_counter()
    try:
        path = ppsm.solve_a_path(structure, x0, lambda t: coefficients, steps=config.grid)
    except exceptions.LeftBox as e:
        report.checks.append(_error_check('residual', e))
        return report
    elapsed = time.perf_counter() - started
    report.extend([CheckResult.from_residual('residual', ppsm.residual(path), tolerances.path, path.steps + 1)],
                  elapsed)

    if _is_linear(structure):
        drift = float(np.max(np.abs(ppsm.target(path) - linear_endpoint(structure, x0, coefficients))))
        holonomy_error = float(np.max(np.abs(ppsm.holonomy(path) - linear_holonomy(structure, coefficients))))
        report.extend([
            CheckResult.from_residual('endpoint_oracle', drift, ORACLE_TOL, 1),
            CheckResult.from_residual('holonomy_oracle', holonomy_error, ORACLE_TOL, 1),
        ])
    if structure.kind == 'trivial':
        base, integral = ppsm.j_trivial(path)
        report.facts['j_trivial'] = {'base': base, 'integral': integral.rows}
    report.facts.update({'source': ppsm.source(path), 'target': ppsm.target(path), 'steps': path.steps})

    if out is not None:
        ppsm.dump_path(path, out / PATH_FILE)
        write_path_table(path, out / PATH_TABLE)
        report.artifacts.extend([PATH_FILE, PATH_TABLE])
    return report


def run_gauge_demo(config, tolerances, rng, out) -> Report:
    """
    Flow one A-path along ``samples`` random gauge parameters and watch the
    invariants; params: x0, coefficients, flow_time, flow_steps, gauge_scale
    """
    structure = _structure(config, tolerances)
    x0 = _vector(config, 'x0', structure.dim)
    coefficients = _vector(config, 'coefficients', structure.size)
    duration = float(config.params.get('flow_time', DEFAULT_FLOW_TIME))
    flow_steps = int(config.params.get('flow_steps', 10))
    scale = float(config.params.get('gauge_scale', 1.0))
    report = Report(config.command, config.scenario or structure.name, config.seed)

    try:
        path = ppsm.solve_a_path(structure, x0, lambda t: coefficients, steps=config.grid)
    except exceptions.LeftBox as e:
        report.checks.append(_error_check('residual', e))
        return report
    linear = _is_linear(structure)
    reference = ppsm.holonomy(path) if linear else None

    started = time.perf_counter()
    endpoint_drift, holonomy_drift, reprojected = 0.0, 0.0, 0
    flowed = path
    gauges = [ppsm.GaugeParameter.random(path, rng, scale) for _ in range(config.samples)]
    for gauge in gauges:
        try:
            flowed = ppsm.gauge_flow(path, gauge, flow_steps, duration)
        except exceptions.PathError as e:
            report.checks.append(_error_check('gauge_flow', e))
            return report
        reprojected += int(flowed.reprojected)
        endpoint_drift = max(endpoint_drift,
                             float(np.max(np.abs(ppsm.source(flowed) - ppsm.source(path)))),
                             float(np.max(np.abs(ppsm.target(flowed) - ppsm.target(path)))))
        if linear:
            holonomy_drift = max(holonomy_drift, float(np.max(np.abs(ppsm.holonomy(flowed) - reference))))
    elapsed = time.perf_counter() - started

    report.extend([CheckResult.from_residual('endpoint_drift', endpoint_drift, ENDPOINT_DRIFT_TOL, len(gauges),
                                             reprojected=reprojected)], elapsed)
    if linear:
        report.extend([CheckResult.from_residual('holonomy_drift', holonomy_drift, HOLONOMY_DRIFT_TOL,
                                                 len(gauges))], elapsed)

    started = time.perf_counter()
    hamiltonian = ppsm.hamiltonian_identity_check(path, gauges[0], rng=rng) if gauges else 0.0
    report.extend([CheckResult.from_residual('hamiltonian_identity', hamiltonian, HAMILTONIAN_TOL,
                                             HAMILTONIAN_PROBES)], time.perf_counter() - started)

    if out is not None:
        write_path_table(path, out / PATH_TABLE)
        write_path_table(flowed, out / FLOWED_PATH_TABLE)
        report.artifacts.extend([PATH_TABLE, FLOWED_PATH_TABLE])
    return report


def run_relational(config, tolerances, rng, out) -> Report:
    name = config.scenario or relational.RelationalScenario.RELATIONAL_PAIR
    if not relational.RelationalScenario.check(name):
        raise exceptions.ConfigError(f"Unknown relational scenario {name!r}, "
                                     f"expected one of {relational.RelationalScenario.all()}")
    started = time.perf_counter()
    data = relational.build_scenario(name, rng)
    axioms = relational.check_axioms(data)
    report = Report(config.command, name, config.seed)
    report.extend(axioms.checks, time.perf_counter() - started)
    report.facts.update(axioms.facts)
    return report


COMMANDS: Dict[str, Runner] = {
    Command.CHECK_STRUCTURE: run_check_structure,
    Command.CLASSIFY: run_classify,
    Command.FOLIATION: run_foliation,
    Command.REDUCE: run_reduce,
    Command.MORITA: run_morita,
    Command.INTEGRATE_PATH: run_integrate_path,
    Command.GAUGE_DEMO: run_gauge_demo,
    Command.RELATIONAL: run_relational,
}


def run(config: ScenarioConfig, out=None) -> Report:
    """
    Run the command of a validated config and write the report into ``out``

    :raise ConfigError: if the config does not fit the command
    """
    runner = COMMANDS.get(config.command)
    if runner is None:
        raise exceptions.ConfigError(f"Command {config.command!r} produces no report")
    tolerances = config.build_tolerances()
    rng = np.random.default_rng(config.seed if config.seed is not None else 0)
    out = pathlib.Path(out) if out is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    log.info("Running %s %s", config.command, config.scenario)
    report = runner(config, tolerances, rng, out)
    if out is not None:
        report.write(out)
    return report
