"""Physical constants (CODATA 2018), shared by every module.

Kept as a hand-written table rather than ``scipy.constants`` because newer
SciPy releases track CODATA 2022, which moves the electron mass.
"""

import math

#: speed of light in vacuum, m/s (exact)
C = 299_792_458.0
#: Planck constant, J s (exact)
H = 6.626_070_15e-34
#: reduced Planck constant, J s
HBAR = H / (2.0 * math.pi)
#: elementary charge, C (exact); also J per eV
E_CHARGE = 1.602_176_634e-19
EV = E_CHARGE
#: electron rest mass, kg
M_E = 9.109_383_7015e-31
