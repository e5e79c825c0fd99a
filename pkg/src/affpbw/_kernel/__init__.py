"""Kernel selector: compiled cython kernels when available, pure python otherwise.

Set AFFPBW_PURE=1 to force the pure kernel (used by the benchmark).
"""

import os

if os.environ.get("AFFPBW_PURE") == "1":
    from . import poly_py as _impl

    KERNEL = "pure"
else:
    try:
        from . import poly_cy as _impl  # type: ignore[attr-defined]

        KERNEL = "cython"
    except ImportError:
        from . import poly_py as _impl

        KERNEL = "pure"

pnorm = _impl.pnorm
padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pmul = _impl.pmul
pmul_int = _impl.pmul_int
pshift = _impl.pshift
pcontent = _impl.pcontent
pprim = _impl.pprim
pdiv_exact = _impl.pdiv_exact
pprem = _impl.pprem
pgcd = _impl.pgcd
