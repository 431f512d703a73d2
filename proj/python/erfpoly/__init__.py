from ._erfpoly import *  # noqa: F401,F403
from ._erfpoly import DomainError, ConvergenceError, ResourceError  # noqa: F401
