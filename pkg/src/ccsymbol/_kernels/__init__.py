"""Hot inner loops over modular coefficient rings.

The compiled ``_fast`` extension is used when it was built; otherwise the
pure-Python ``_slow`` module with identical signatures takes over.  Setting
``CCSYMBOL_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("CCSYMBOL_PURE_PYTHON", "") not in ("", "0"):
    from ._slow import conv_mod, conv_trunc_mod, pos_params_mod, pos_params_trunc_mod

    BACKEND = "python"
else:
    try:
        from ._fast import conv_mod, conv_trunc_mod, pos_params_mod, pos_params_trunc_mod

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._slow import conv_mod, conv_trunc_mod, pos_params_mod, pos_params_trunc_mod

        BACKEND = "python"

__all__ = ["BACKEND", "conv_mod", "conv_trunc_mod", "pos_params_mod", "pos_params_trunc_mod"]
