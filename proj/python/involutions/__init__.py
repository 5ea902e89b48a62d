"""Decreasing involutions of real intervals.

Construction of involutions from even functions and symmetric equations,
isochronous potential wells, a central-force stability criterion, and a
functional-differential equation with the deviating argument -t/(1+t).
"""

from ._involutions import *  # noqa: F401,F403
from ._involutions import __doc__  # noqa: F401
