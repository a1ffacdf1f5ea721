"""Default numeric tolerances.

Double-precision composition of ~100 transfer matrices loses roughly three
significant digits, so algebraic identities are checked at 1e-9 while
geometric point comparisons (which additionally go through a division)
get 1e-7.
"""

# |alpha|^2 - |beta|^2 - 1 and other algebraic identities
DET_TOL = 1e-9

# complex point comparisons (fixed points, orbit shapes)
GEO_TOL = 1e-7

# region tagging band around |z| = 1
DISC_TOL = 1e-9

# classification band on trace^2 - 4; the parabolic class is a measure-zero
# set and numerically becomes a band of this width
CLASS_TOL = 1e-9

# margin below which a layer is rejected as evanescent
EVANESCENT_TOL = 1e-12
