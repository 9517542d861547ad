"""
    1) one workflow per scenario task: compute, verify contracts, build the series
    2) write the series atomically once the workflow is done
    3) optional loguru file sink inside work_dir
    4) figure presets run their curves in a thread pool
"""
import datetime
import os
import os.path as osp
from concurrent.futures import ThreadPoolExecutor

from loguru import logger

from Spectra.config.baseline import TASKS
from Spectra.config.presets import caption_stem, resolve_names
from Spectra.config.scenario import ScenarioConfig
from Spectra.datasets.builder import build_series
from Spectra.datasets.writers import write_series
from Spectra.dynamics.oracle import solve_b2, solve_c2, spectrum_from_trajectory, steady_state_c2
from Spectra.evaluate.crosscheck import CrossCheckEval
from Spectra.models.emission import spectrum_eval
from Spectra.models.susceptibility import chi_eval, group_slope_report
from Spectra.utils.errors import ConfigError, ContractError
from Spectra.utils.parse_args import parse_config
from Spectra.utils.pretty import pretty_print, summary_table
from Spectra.utils.utils import threads_from_env


def init_logger(work_dir):
    """
        add a timestamped file sink in work_dir; returns the sink id (None without work_dir)
    """
    if work_dir is None:
        return None
    os.makedirs(work_dir, exist_ok=True)
    _time = datetime.datetime.now().strftime("[%Y-%m-%d][%H:%M:%S]")
    _time += "PID:{}".format(os.getpid())
    logger_name = osp.join(work_dir, _time + ".log")
    sink_id = logger.add(logger_name)
    logger.info("create work dir: {}".format(work_dir))
    logger.info("create logger: {}".format(logger_name))
    return sink_id


class ScenarioRunner(object):
    def __init__(self, config: ScenarioConfig, work_dir=None, quiet=False, progress=False, out_path=None):
        """
            runner for a single scenario
        """
        self.config = config
        self.workflows = [(config.task, 1)]
        self.quiet = quiet
        self.progress = progress
        self.out_path = out_path or config.output_file()
        self.work_dir = work_dir
        self.sink_id = init_logger(work_dir)

        # filled by the workflow:
        self.series = None
        self.summary = []
        self.failure = None

    def metadata(self, **extra):
        meta = self.config.to_dict()
        meta.pop("out", None)
        meta.update(extra)
        return meta

    def before_run(self):
        """
            before run hook
        """
        logger.info("scenario:\n{}", self.config.to_text())
        logger.info(str(self.workflows))

    def run(self):
        """
            run workflows
        """
        self.before_run()
        try:
            for flow, times in self.workflows:
                assert flow in TASKS
                workflow_fn = getattr(self, flow)
                logger.info("WORKFLOW: {}".format(flow))
                for _ in range(times):
                    self.series = workflow_fn()
            return self.after_run()
        finally:
            if self.sink_id is not None:
                logger.remove(self.sink_id)
                self.sink_id = None

    def after_run(self):
        """
            after run hook: write, summarise, then surface a deferred contract failure
        """
        path = write_series(self.series, self.out_path, self.config.output_format)
        logger.info("{} rows written to {}", len(self.series), path)
        if not self.quiet:
            summary_table("{} -> {}".format(self.config.task, path), self.summary)
        if self.failure is not None:
            raise self.failure
        return path

    def emission(self):
        params = self.config.emission_params()
        spectrum = spectrum_eval(params, self.config.detuning_grid())
        self.summary = [("dark line", d, 0.0) for d in spectrum.dark_lines]
        self.summary += [("peak", x, height) for x, height in spectrum.peaks]
        return build_series(dict(type="emission", metadata=self.metadata()), spectrum)

    def susceptibility(self):
        response = chi_eval(self.config.probe_params(), self.config.detuning_grid())
        self.summary = [("transparency slope", x, slope) for x, slope in group_slope_report(response)]
        return build_series(dict(type="susceptibility", metadata=self.metadata()), response)

    def dynamics(self):
        cfg = self.config
        grid = cfg.solver_grid()
        if cfg.amplitude == "b2":
            traj = solve_b2(cfg.emission_params(), grid, progress=self.progress)
            self.summary = [("|b2(t_max)|", cfg.tmax, abs(traj.final))]
        else:
            params = cfg.probe_params()
            traj = solve_c2(params, cfg.omega, cfg.delta, grid, progress=self.progress)
            self.summary = [("|c2(t_max)|", cfg.tmax, abs(traj.final)),
                            ("|c2| tail mean", cfg.tmax, abs(traj.tail_mean()))]
            if cfg.gamma > 0:
                self.summary.append(("|c2(inf)| closed form", cfg.delta,
                                     abs(steady_state_c2(params, cfg.omega, cfg.delta))))
        return build_series(dict(type="dynamics", metadata=self.metadata()), traj)

    def crosscheck(self):
        cfg = self.config
        params = cfg.emission_params()
        frequency = spectrum_eval(params, cfg.detuning_grid())
        traj = solve_b2(params, cfg.solver_grid(), progress=self.progress)
        evaluator = CrossCheckEval()
        evaluator.load_gt(frequency)
        evaluator.load_pred(spectrum_from_trajectory(traj, params, frequency.grid))
        result = evaluator.evaluate()
        self.summary = [("max_rel_dev", "-", result["max_rel_dev"])]
        if not result["passed"]:
            self.failure = ContractError("crosscheck deviation {:.4f} exceeds {}".format(
                result["max_rel_dev"], result["tolerance"]))
        return build_series(dict(type="crosscheck", metadata=dict(t_max=cfg.tmax, steps=cfg.steps)), evaluator)

    def density(self):
        cfg = self.config
        return build_series(dict(type="density", model=cfg.reservoir(), grid=cfg.detuning_grid(),
                                 metadata=self.metadata()))


def run_scenario(config: ScenarioConfig, work_dir=None, quiet=True, progress=False):
    """
        returns (exit status, output path); failures raise
    """
    runner = ScenarioRunner(config, work_dir=work_dir, quiet=quiet, progress=progress)
    return 0, runner.run()


def reproduce_figure(name, out_dir=".", fmt="csv", overrides=None, work_dir=None, quiet=True):
    """
        run every curve of a preset or figure group, one caption-named file per curve
    """
    try:
        names = resolve_names(name)
    except KeyError as e:
        raise ConfigError(e.args[0])
    flags = dict(overrides or {})
    flags["format"] = fmt
    configs = [(n, parse_config(flags=flags, preset=n)) for n in names]
    threads = threads_from_env(len(configs))
    sink_id = init_logger(work_dir)
    logger.info("reproduce {}: {} curves on {} threads", name, len(configs), threads)

    def job(item):
        preset, config = item
        path = osp.join(out_dir, "{}.{}".format(caption_stem(preset), fmt))
        return ScenarioRunner(config, quiet=True, out_path=path).run()

    try:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            paths = list(pool.map(job, configs))
    finally:
        if sink_id is not None:
            logger.remove(sink_id)
    if not quiet:
        pretty_print(["{} -> {}".format(n, p) for (n, _), p in zip(configs, paths)], color="green", line=True)
    return paths
