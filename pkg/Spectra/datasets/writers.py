"""
    csv / json serialisation of a Series

    csv: header line, comma separated, %.16e floats (17 significant digits), LF endings;
         crosscheck series end with a `# {...}` metadata record
    json: {"columns", "metadata", "rows", "task"} with sorted keys and repr floats;
          non-finite values become null
"""
import io
import json
import math

import numpy as np

from Spectra.datasets.series import Series
from Spectra.utils.utils import atomic_write_text

FLOAT_FORMAT = "%.16e"


def _plain(value):
    """
        json-safe copy of metadata values
    """
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, complex):
        return [_plain(value.real), _plain(value.imag)]
    return value


def series_to_csv(series: Series) -> str:
    buf = io.StringIO()
    np.savetxt(buf, series.data, fmt=FLOAT_FORMAT, delimiter=",", newline="\n",
               header=",".join(series.columns), comments="")
    if series.trailer:
        buf.write("# " + json.dumps(_plain(series.metadata), sort_keys=True) + "\n")
    return buf.getvalue()


def series_to_json(series: Series) -> str:
    payload = dict(task=series.task, columns=list(series.columns),
                   rows=[[_plain(v) for v in row] for row in series.data.tolist()],
                   metadata=_plain(series.metadata))
    return json.dumps(payload, sort_keys=True, allow_nan=False) + "\n"


WRITERS = dict(csv=series_to_csv, json=series_to_json)


def write_series(series: Series, path, fmt="csv"):
    """
        serialise and write atomically; returns the path
    """
    if fmt not in WRITERS:
        raise ValueError("unknown output format '{}', expected one of {}".format(fmt, sorted(WRITERS)))
    return atomic_write_text(path, WRITERS[fmt](series))
