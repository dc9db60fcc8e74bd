"""Exact and numerical checks of Stark-type conjectures through Yoshida's
class invariants: ray class groups, Shintani zeta values, Barnes and
p-adic gamma functions, Hecke L-values and Stark unit recognition."""

__version__ = "0.1.0"
