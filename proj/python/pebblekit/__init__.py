from ._pebblekit import *  # noqa: F401,F403
from ._pebblekit import __doc__  # noqa: F401
