"""
    tabular series exchanged between the physics modules and the writers
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class Series:
    """
        task:     producing task (emission, susceptibility, dynamics, crosscheck, density)
        columns:  column names, in output order
        data:     float array of shape (rows, len(columns))
        metadata: json-serialisable run description
        trailer:  write metadata as a trailing `# {...}` record in csv output
    """
    task: str
    columns: Tuple[str, ...]
    data: np.ndarray
    metadata: Dict[str, Any] = field(default_factory=dict)
    trailer: bool = False

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        if data.ndim != 2 or data.shape[1] != len(self.columns):
            raise ValueError("series data of shape {} does not match columns {}".format(
                data.shape, self.columns))
        object.__setattr__(self, "data", data)

    def __len__(self):
        return self.data.shape[0]

    def column(self, name):
        return self.data[:, self.columns.index(name)]
