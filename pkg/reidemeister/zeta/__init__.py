# Power series, zeta functions and Möbius congruences
