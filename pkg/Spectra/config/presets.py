"""
    figure presets: one dict per curve, parameters as printed in the figure captions
    (gamma = 1, beta = 1, default detuning grid unless noted)
"""

# density of modes, single band and double band
fig1b = dict(task="density", model="single", dg=0.0)
fig1c = dict(task="density", model="double", dg1=-1.0, dg2=1.0)

# emission, lower edge moved away from an upper edge at resonance
fig2a_1 = dict(task="emission", model="double", gamma=1.0, dg1=-1.0, dg2=0.0)
fig2a_2 = dict(task="emission", model="double", gamma=1.0, dg1=-2.0, dg2=0.0)
fig2a_3 = dict(task="emission", model="double", gamma=1.0, dg1=-3.0, dg2=0.0)

# emission, atom in the middle of the gap
fig2b_1 = dict(task="emission", model="double", gamma=1.0, dg1=-1.0, dg2=1.0)
fig2b_2 = dict(task="emission", model="double", gamma=1.0, dg1=-2.0, dg2=2.0)
fig2b_3 = dict(task="emission", model="double", gamma=1.0, dg1=-3.0, dg2=3.0)

# emission, single band
fig3_1 = dict(task="emission", model="single", gamma=1.0, dg=0.0)
fig3_2 = dict(task="emission", model="single", gamma=1.0, dg=1.0)
fig3_3 = dict(task="emission", model="single", gamma=1.0, dg=-1.0)

# probe susceptibility
fig4a = dict(task="susceptibility", model="double", gamma=1.0, dg1=-1.0, dg2=0.0)
fig4b = dict(task="susceptibility", model="double", gamma=1.0, dg1=-2.0, dg2=0.0)
fig4c = dict(task="susceptibility", model="double", gamma=1.0, dg1=-3.0, dg2=0.0)

fig5 = dict(task="susceptibility", model="single", gamma=1.0, dg=0.0)

fig6a = dict(task="susceptibility", model="double", gamma=1.0, dg1=-1.0, dg2=1.0)
fig6b = dict(task="susceptibility", model="double", gamma=1.0, dg1=-2.0, dg2=2.0)
fig6c = dict(task="susceptibility", model="double", gamma=1.0, dg1=-3.0, dg2=3.0)

PRESETS = dict(
    fig1b=fig1b, fig1c=fig1c,
    fig2a_1=fig2a_1, fig2a_2=fig2a_2, fig2a_3=fig2a_3,
    fig2b_1=fig2b_1, fig2b_2=fig2b_2, fig2b_3=fig2b_3,
    fig3_1=fig3_1, fig3_2=fig3_2, fig3_3=fig3_3,
    fig4a=fig4a, fig4b=fig4b, fig4c=fig4c,
    fig5=fig5,
    fig6a=fig6a, fig6b=fig6b, fig6c=fig6c,
)

GROUPS = dict(
    fig1=["fig1b", "fig1c"],
    fig2a=["fig2a_1", "fig2a_2", "fig2a_3"],
    fig2b=["fig2b_1", "fig2b_2", "fig2b_3"],
    fig2=["fig2a_1", "fig2a_2", "fig2a_3", "fig2b_1", "fig2b_2", "fig2b_3"],
    fig3=["fig3_1", "fig3_2", "fig3_3"],
    fig4=["fig4a", "fig4b", "fig4c"],
    fig6=["fig6a", "fig6b", "fig6c"],
)


def get_preset(name):
    """
        copy of a preset dict
    """
    if name not in PRESETS:
        raise KeyError("unknown preset '{}', valid names: {}".format(name, ", ".join(sorted(PRESETS))))
    return dict(PRESETS[name])


def resolve_names(name):
    """
        a group expands to its curves, a preset name to itself
    """
    if name in GROUPS:
        return list(GROUPS[name])
    if name in PRESETS:
        return [name]
    valid = sorted(GROUPS) + sorted(PRESETS)
    raise KeyError("unknown preset '{}', valid names: {}".format(name, ", ".join(valid)))


def _num(value):
    text = "{:g}".format(value)
    return "0" if text == "-0" else text


def caption_stem(name):
    """
        caption-derived file stem, e.g. fig2a_3_double_dg1_-3_dg2_0
    """
    preset = PRESETS[name]
    parts = [name, preset["model"]]
    for key in ("dg1", "dg2", "dg"):
        if key in preset:
            parts += [key, _num(preset[key])]
    return "_".join(parts)
