"""
    config
    defaults of every scenario key; all frequencies and rates in units of beta
"""

TASKS = ("emission", "susceptibility", "dynamics", "crosscheck", "density")
MODELS = ("none", "single", "double")
SCHEMES = ("exponential", "trapezoidal")
AMPLITUDES = ("b2", "c2")
FORMATS = ("csv", "json")

model_config = dict(
    model=None,
    beta=1.0,
    dg1=None,
    dg2=None,
    dg=None,
)

atom_config = dict(
    gamma=1.0,
    chi0=1.0,
    omega=0.01,
    delta=0.0,
)

# [-5, 5] x 2001 holds every feature of the figure sets at beta = gamma = 1
grid_config = dict(
    grid_min=-5.0,
    grid_max=5.0,
    grid_points=2001,
)

# tmax=None resolves to TMAX_PER_GAMMA / gamma (CROSSCHECK_TMAX_PER_GAMMA for crosscheck)
solver_config = dict(
    tmax=None,
    steps=20000,
    scheme="exponential",
    amplitude="b2",
)

output_config = dict(
    format="csv",
    out=None,
)

TMAX_PER_GAMMA = 40.0
CROSSCHECK_TMAX_PER_GAMMA = 200.0

DEFAULTS = dict(task=None, **model_config, **atom_config, **grid_config, **solver_config, **output_config)
