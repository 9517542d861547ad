"""
    emission, probe susceptibility and memory-kernel dynamics of an atom
    coupled to a photonic band gap reservoir
"""
__version__ = "0.1.0"
