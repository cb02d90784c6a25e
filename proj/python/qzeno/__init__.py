"""Gaussian wave-packet decay under Ohmic dissipation: survival ratios,
repeated-measurement rates, and the Zeno/anti-Zeno crossover."""

from ._qzeno import *  # noqa: F401,F403
from ._qzeno import __all__, __version__  # noqa: F401
