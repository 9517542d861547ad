"""
    scenario runner
"""
from .runner import ScenarioRunner, reproduce_figure, run_scenario  # noqa: F401
