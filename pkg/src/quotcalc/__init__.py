"""Exact calculations for Quot-scheme correspondences.

Schur functors, Borel-Weil-Bott on Grassmannians, Lascoux-type
resolutions, classes in Z[L] and semiorthogonal decomposition catalogs.
"""

__version__ = "0.1.0"
