import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nsmacdonald.qt import QTRational
from nsmacdonald.xpoly import XPolynomial


@pytest.fixture(scope="session")
def qt_symbols():
    return QTRational.q(), QTRational.t(), QTRational.one()


@pytest.fixture(scope="session")
def golden_polys(qt_symbols):
    """The three hand-derived golden polynomials, written out explicitly."""
    q, t, one = qt_symbols
    x1 = XPolynomial.variable(2, 1)
    x2 = XPolynomial.variable(2, 2)
    return {
        (1, 0): x1,
        (0, 1): x2 + x1.scale(q * (one - t) / (one - q * t)),
        (2, 0): x1 * x1 + (x1 * x2).scale((one - t) / (one - q * t)),
    }
