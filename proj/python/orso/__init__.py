"""Young-function calculus, Orlicz norms and optimal moduli of continuity
for fractional Orlicz-Sobolev embeddings."""

try:
    from ._orso import *  # noqa: F401,F403
    from ._orso import __version__  # noqa: F401
except ImportError:  # in-tree use: extension module on PYTHONPATH
    from _orso import *  # noqa: F401,F403
    from _orso import __version__  # noqa: F401
