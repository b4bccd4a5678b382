"""Flattened parking functions: enumeration, exact counts and bijection checks."""

from ._core import *  # noqa: F401,F403
from ._core import __all__  # noqa: F401
