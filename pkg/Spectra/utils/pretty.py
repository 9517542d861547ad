""" console output """
import json
from termcolor import cprint
from rich.console import Console
from rich.table import Table

console = Console(stderr=True)


def pretty_print(data_list, color="yellow", line=False):
    """
        pretty print
    """
    if line:
        cprint("-------------------------------------------------", color=color)
    for data in data_list:
        if isinstance(data, str):
            cprint(data, color)
        else:
            data = json.dumps(data, indent=2, default=str)
            data = data.replace("\"", "").replace(":", " =")
            cprint(data, color)
    return


def summary_table(title, rows, columns=("feature", "detuning", "value")):
    """
        rich table of (name, detuning, value) rows
    """
    table = Table(title=title)
    for name in columns:
        table.add_column(name)
    for row in rows:
        table.add_row(*[_fmt(cell) for cell in row])
    console.print(table)
    return table


def _fmt(cell):
    if isinstance(cell, float):
        return "{:+.6g}".format(cell)
    return str(cell)
