"""Physical constants (CODATA 2018, SI units).

Only the electromagnetic modules need dimensional constants; everything else
is unit-agnostic. h and e are exact by definition since the 2019 SI revision.
"""

import math

mu0 = 1.25663706212e-06       # vacuum permeability, H/m
q_e = 1.602176634e-19         # elementary charge, C (exact)
m_e = 9.1093837015e-31        # electron mass, kg
h_planck = 6.62607015e-34     # Planck constant, J s (exact)
hbar = h_planck / (2.0 * math.pi)   # J s
flux_quantum = h_planck / (2.0 * q_e)   # superconducting flux quantum h/2e, Wb

ev_j = 1.602176634e-19        # 1 eV in J
hbar_ev_s = hbar / ev_j       # hbar in eV s
h_ev_s = h_planck / ev_j      # h in eV s
