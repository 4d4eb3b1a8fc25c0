"""Finite workbench for point-free relation algebra."""

from ._relalg import *  # noqa: F401,F403
from ._relalg import __doc__  # noqa: F401
