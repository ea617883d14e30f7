"""Kernel backend selection.

The compiled extension ``cremona._poly_cy`` is used when it importable;
otherwise the pure-Python fallback is loaded.  Set ``CREMONA_PURE=1`` to
force the fallback (the benchmark uses this to compare the two).
"""

import os

if os.environ.get("CREMONA_PURE"):
    from . import _poly_py as kernel
else:
    try:
        from . import _poly_cy as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_py as kernel

mul_terms = kernel.mul_terms
lincomb_terms = kernel.lincomb_terms
scale_terms = kernel.scale_terms
content_terms = kernel.content_terms
max_key_grlex = kernel.max_key_grlex
min_exponents = kernel.min_exponents
divexact_terms = kernel.divexact_terms

BACKEND = "compiled" if kernel.IS_COMPILED else "pure"
