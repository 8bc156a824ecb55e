"""Exact Heisenberg-picture dynamics of a driven bosonic mode in a discretized bath."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401
from ._core import __version__  # noqa: F401
