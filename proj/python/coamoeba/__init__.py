"""Coamoebae and phase limit sets of subvarieties of complex tori.

Thin wrapper around the compiled extension.  Roots of a line in P^3 are
passed as a list of four complex numbers, with None for the point at
infinity; polynomials are strings over caller-declared variables.
"""

try:
    from ._coamoeba import *  # noqa: F401,F403  (installed package)
except ImportError:  # in-tree build with the extension on sys.path
    from _coamoeba import *  # noqa: F401,F403

from ._version import __version__  # noqa: F401
