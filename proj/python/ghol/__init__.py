"""Holonomy and parallel transport for U(1) bundles and abelian gerbes.

The heavy lifting lives in the compiled extension; this package adds a
small dict-based convenience layer over the scenario API.
"""

import json as _json
import os as _os
import sys as _sys

if "GHOL_EXT_DIR" in _os.environ:
    # development layout: extension sits in the cmake build tree
    _sys.path.insert(0, _os.environ["GHOL_EXT_DIR"])
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
else:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401


def run_scenario(scenario, parallel=False):
    """Run a scenario given as a dict (or JSON text); returns the report dict."""
    if not isinstance(scenario, str):
        scenario = _json.dumps(scenario)
    from ghol import run_scenario_text

    report, _ = run_scenario_text(scenario, parallel)
    return _json.loads(report)
