"""Exact per-k denominator certificates for falling-factorial calculus,
Fuchsian derivative matrices, hypergeometric systems, and polynomial-ring
differential operators."""

from .certificate import CancellationCertificate, make_certificate
from .matfun import MatQ
from .fuchs import FuchsianSystem
from .hyper import HyperParams

__version__ = "0.1.0"

__all__ = [
    "CancellationCertificate",
    "make_certificate",
    "MatQ",
    "FuchsianSystem",
    "HyperParams",
    "__version__",
]
