"""Nearly holomorphic modular forms of level one, with exact rational arithmetic.

The heavy lifting happens in the compiled extension; this package re-exports
its public names. Rational values cross the boundary as fractions.Fraction.
"""

from nhmf._core import *  # noqa: F401,F403

__version__ = "0.1.0"
