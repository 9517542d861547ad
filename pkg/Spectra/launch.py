"""
    spectra console script
        exit status 0 on success, 2 on configuration errors, 3 on numerical contract failures
"""
import json
import sys

from loguru import logger

from Spectra.runner.runner import reproduce_figure, run_scenario
from Spectra.utils.errors import ConfigError, SpectraError
from Spectra.utils.parse_args import FLAG_KEYS, parse_args


def error_record(error: SpectraError):
    return json.dumps(dict(status="error", kind=error.kind, message=str(error),
                           exit_status=error.exit_status), sort_keys=True)


def main(argv=None):
    try:
        args, config = parse_args(argv)
        if args.quiet:
            logger.remove()
            logger.add(sys.stderr, level="WARNING")
        if config is None:
            overrides = {key: getattr(args, key) for key in FLAG_KEYS if key not in ("out", "format")}
            reproduce_figure(args.name, out_dir=args.out or ".", fmt=args.format or "csv",
                             overrides=overrides, work_dir=args.work_dir, quiet=args.quiet)
        else:
            progress = not args.quiet and config.task in ("dynamics", "crosscheck")
            run_scenario(config, work_dir=args.work_dir, quiet=args.quiet, progress=progress)
    except SpectraError as e:
        sys.stderr.write(error_record(e) + "\n")
        return e.exit_status
    except ValueError as e:
        # preconditions of the physics layer that slipped past config validation
        error = ConfigError(str(e))
        sys.stderr.write(error_record(error) + "\n")
        return error.exit_status
    return 0


if __name__ == "__main__":
    sys.exit(main())
