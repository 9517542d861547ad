"""
    parse args and `key = value` scenario files
"""
import argparse
import os.path as osp
import sys

from Spectra.config.baseline import TASKS
from Spectra.config.presets import get_preset
from Spectra.config.scenario import ScenarioConfig
from Spectra.utils.errors import ConfigError
from Spectra.utils.utils import path_finder

CONFIG_DIR = osp.join(osp.dirname(osp.dirname(osp.abspath(__file__))), "config")

# flag dest -> config key
FLAG_KEYS = ("model", "beta", "gamma", "dg1", "dg2", "dg", "chi0", "omega", "delta", "grid",
             "tmax", "steps", "scheme", "amplitude", "format", "out")

# flags whose values may start with "-", e.g. --grid -5:5:2001
DASHED_VALUE_FLAGS = ("--grid",)


class ScenarioArgumentParser(argparse.ArgumentParser):
    """
        usage errors surface as ConfigError so the CLI reports them like any
        other configuration error
    """

    def error(self, message):
        raise ConfigError("{}: {}".format(self.prog, message))


def join_dashed_values(argv):
    """
        ["--grid", "-5:5:2001"] -> ["--grid=-5:5:2001"]
    """
    joined, tokens = [], iter(argv)
    for token in tokens:
        if token in DASHED_VALUE_FLAGS:
            value = next(tokens, None)
            joined.append(token if value is None else "{}={}".format(token, value))
        else:
            joined.append(token)
    return joined


def split_grid(value):
    """
        MIN:MAX:N -> grid_min, grid_max, grid_points
    """
    parts = str(value).split(":")
    if len(parts) != 3:
        raise ConfigError("grid: expected MIN:MAX:N, got '{}'".format(value))
    return dict(grid_min=parts[0].strip(), grid_max=parts[1].strip(), grid_points=parts[2].strip())


def parse_key_values(text):
    """
        line-oriented `key = value`; `#` starts a comment, blank lines are ignored
    """
    raw = {}
    for lineno, line in enumerate((text or "").splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("line {}: expected 'key = value', got '{}'".format(lineno, line))
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("line {}: missing key".format(lineno))
        if key == "grid":
            raw.update(split_grid(value))
        else:
            raw[key] = value
    return raw


def parse_config(text=None, flags=None, preset=None):
    """
        preset, then file text, then flags; later sources override earlier ones
    """
    raw = {}
    if preset is not None:
        try:
            raw.update(get_preset(preset))
        except KeyError as e:
            raise ConfigError(e.args[0])
    raw.update(parse_key_values(text))
    for key, value in (flags or {}).items():
        if value is None:
            continue
        if key == "grid":
            raw.update(split_grid(value))
        else:
            raw[key] = value
    return ScenarioConfig.from_mapping(raw)


def read_config_file(path):
    """
        a scenario file, looked up as given and then under Spectra/config
    """
    try:
        path = path_finder([path, osp.join(CONFIG_DIR, path)])
    except FileNotFoundError:
        raise ConfigError("config: file '{}' not found".format(path))
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _parse_args(argv=None):
    """
    spectra emission --model double --dg1 -1 --dg2 0 --gamma 1 --out fig2a_1.csv
    spectra susceptibility --preset fig6b --format json
    spectra dynamics --config scenario.cfg --amplitude c2 --delta 0.5
    spectra crosscheck --preset fig2b_1
    spectra reproduce fig2a --work-dir ../work_dir
    """
    parser = ScenarioArgumentParser(
        prog="spectra",
        description="Emission, probe susceptibility and memory-kernel dynamics of an atom "
                    "coupled to a photonic band gap reservoir")
    parser.add_argument("command", choices=TASKS + ("reproduce",), help="task to run, or reproduce")
    parser.add_argument("name", nargs="?", default=None, help="preset or figure group for reproduce")
    parser.add_argument("--config", default=None, help="`key = value` scenario file")
    parser.add_argument("--preset", default=None, help="seed the scenario from a figure preset")
    parser.add_argument("--model", default=None, help="none|single|double")
    parser.add_argument("--beta", default=None, help="coupling constant (unit of frequency)")
    parser.add_argument("--gamma", default=None, help="Markovian decay rate")
    parser.add_argument("--dg1", default=None, help="lower band edge detuning (double band)")
    parser.add_argument("--dg2", default=None, help="upper band edge detuning (double band)")
    parser.add_argument("--dg", default=None, help="band edge detuning (single band)")
    parser.add_argument("--chi0", default=None, help="susceptibility prefactor")
    parser.add_argument("--omega", default=None, help="probe Rabi frequency")
    parser.add_argument("--delta", default=None, help="probe detuning for dynamics --amplitude c2")
    parser.add_argument("--grid", default=None, help="detuning grid MIN:MAX:N")
    parser.add_argument("--tmax", default=None, help="final time of the time-domain solver")
    parser.add_argument("--steps", default=None, help="number of solver steps")
    parser.add_argument("--scheme", default=None, help="exponential|trapezoidal")
    parser.add_argument("--amplitude", default=None, help="b2|c2")
    parser.add_argument("--format", default=None, help="csv|json")
    parser.add_argument("--out", default=None, help="output path (or directory for reproduce)")
    parser.add_argument("--work-dir", dest="work_dir", default=None, help="directory for the log file")
    parser.add_argument("--quiet", action="store_true", help="no console summary")
    return parser.parse_args(join_dashed_values(sys.argv[1:] if argv is None else argv))


def parse_args(argv=None):
    """
        returns (args, config); config is None for `reproduce`
    """
    args = _parse_args(argv)
    if args.command == "reproduce":
        if args.name is None:
            raise ConfigError("reproduce: preset or figure group required")
        return args, None
    if args.name is not None:
        raise ConfigError("unexpected argument '{}'".format(args.name))
    text = read_config_file(args.config) if args.config else None
    flags = {key: getattr(args, key) for key in FLAG_KEYS}
    flags["task"] = args.command
    return args, parse_config(text=text, flags=flags, preset=args.preset)
