"""
    utils
"""
import os
import os.path as osp
import tempfile


def path_finder(PATHS):
    """
        auto find path in PATHS
    """
    for path in PATHS:
        if osp.exists(path):
            return path
    raise FileNotFoundError("none of {} exists".format(list(PATHS)))


def threads_from_env(n_jobs):
    """
        worker count for n_jobs independent curves, capped by SPECTRA_THREADS
    """
    cap = os.cpu_count() or 1
    value = os.environ.get("SPECTRA_THREADS")
    if value:
        try:
            cap = int(value)
        except ValueError:
            raise ValueError("SPECTRA_THREADS must be an integer, got '{}'".format(value))
        if cap < 1:
            raise ValueError("SPECTRA_THREADS must be >= 1, got {}".format(cap))
    return max(1, min(cap, n_jobs))


def atomic_write_text(path, text):
    """
        write-then-rename; readers never see a partial file
    """
    directory = osp.dirname(osp.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if osp.exists(tmp):
            os.remove(tmp)
        raise
    return path
