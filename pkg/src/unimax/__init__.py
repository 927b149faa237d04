"""unimax: unique maximal overgroups of Sylow subgroups.

Symbolic classifier + brute-force permutation-group oracle + verification
harness for the question: is a Sylow r-subgroup of an almost simple group
contained in a unique maximal subgroup?
"""

__version__ = "0.1.0"

from .groupspec import GroupSpec, OuterLabel, Verdict  # noqa: F401
from .classifier import classify  # noqa: F401
