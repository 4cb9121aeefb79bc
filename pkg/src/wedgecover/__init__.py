"""Universal cover of the restricted Lorentz group from pairs of wedge reflections."""
from .errors import CoverError
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "CoverError", "__version__"]
