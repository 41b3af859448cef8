"""Gateway-diversity outage and switching analysis for Q/V-band feeder links.

Thin wrapper over the C++ core; see the project README for the CLI and the
scenario file format.
"""

from gwdiv._core import *  # noqa: F401,F403
from gwdiv._core import __version__  # noqa: F401
