"""Python bindings for the prefixlab C++ core.

Bit strings are plain str over '0'/'1'; the empty string is written "-".
Exact dyadic quantities come back as fractions.Fraction and an infinite
complexity as None.
"""

from ._prefixlab import *  # noqa: F401,F403
from ._prefixlab import MachineGraph, CensusTable

__version__ = "0.1.0"


def load_file(path):
    with open(path, encoding="utf-8") as fh:
        return MachineGraph.load(fh.read())


def census(machine, max_n=None):
    if max_n is None:
        max_n = max((len(cw) for cw, _ in machine.entries()), default=0)
    return CensusTable.build(machine, max_n)
