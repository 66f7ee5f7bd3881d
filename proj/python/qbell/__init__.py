"""Bipartite d-outcome Bell functionals.

Dual coefficient tables (correlation / joint-probability), named families
(CHSH, CGLMP, SLK), local-realistic bounds by exhaustive enumeration,
Bell-operator spectra, entanglement scans, noise thresholds and polytope
tightness.
"""

from ._qbell import *  # noqa: F401,F403
from ._qbell import __version__  # noqa: F401
