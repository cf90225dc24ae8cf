from .qpoly import QPoly, qpoly_eval, qpoly_gcd
from .qmode import QMode, SYMBOLIC
from .qfrac import QFraction
from .upoly import UPoly, poly_arith, poly_gcd
from .ratfn import RationalFn, poly_divrem, ratfn_normalize
from .series import Series, series_exp, series_from_ratfn, series_log, series_log_derivative
