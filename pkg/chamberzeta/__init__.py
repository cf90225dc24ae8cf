"""Exact computation of the type-1 chamber zeta function of PGL3(F_q[t]) acting on its building."""

__version__ = '1.0.0'
