"""Fast Dice Roller: uniform sampling from fair coin flips, with exact bit-cost analysis."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
