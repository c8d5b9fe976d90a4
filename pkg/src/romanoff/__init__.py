"""Workbench for representation counts of the form prime + g**(m1*m1) + g**(m2*m2).

Modules: exact modular arithmetic (`arith`), quadratic-congruence root
counting (`quadroots`), sieving and representation statistics (`repcount`),
the bounding sums over odd squarefree moduli (`ledger`), and a command-line
front end (`cli`). Hot root-count kernels live in a compiled extension with a
pure numpy fallback; `backend_name` says which lane is active.
"""

from ._native import backend_name

__version__ = "0.1.0"

__all__ = ["backend_name", "__version__"]
