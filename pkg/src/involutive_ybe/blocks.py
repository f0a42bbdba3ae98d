"""Block identities for involutive solutions of ``D Y D = Y D Y``.

With ``D = diag(I_p, -I_{n-p})`` and ``Y`` partitioned conformally as
``[[Y1, Y2], [Y3, Y4]]``, the Yang-Baxter relation and ``Y**2 = I`` are each
equivalent to four block equations; together they imply (and, for an
involution, are implied by) the quadratic and coupling identities below.
"""

from dataclasses import dataclass, fields

import numpy as np

from .errors import DimensionError
from .linalg import as_square, identity


def split_blocks(y, p):
    y = as_square(y, "y")
    n = y.shape[0]
    if not 1 <= p < n:
        raise DimensionError(f"block split needs 1 <= p < n, got p={p}, n={n}")
    return y[:p, :p], y[:p, p:], y[p:, :p], y[p:, p:]


@dataclass(frozen=True)
class BlockIdentityReport:
    """Normalized residual of every block identity, named by what it states."""

    # D Y D = Y D Y
    ybe_y1: float        # Y1^2 - Y1 = Y2 Y3
    ybe_y4: float        # Y4^2 + Y4 = Y3 Y2
    ybe_y2: float        # (Y1 + I) Y2 = Y2 Y4
    ybe_y3: float        # Y3 (Y1 + I) = Y4 Y3
    # Y^2 = I
    inv_y1: float        # I - Y1^2 = Y2 Y3
    inv_y4: float        # I - Y4^2 = Y3 Y2
    inv_y2: float        # Y1 Y2 = -Y2 Y4
    inv_y3: float        # Y3 Y1 = -Y4 Y3
    # derived identities
    quad_y1: float       # (2 Y1 + I)(Y1 - I) = 0
    quad_y4: float       # (2 Y4 - I)(Y4 + I) = 0
    annihilate_y2: float  # (2 Y1 + I) Y2 = 0
    annihilate_y3: float  # Y3 (2 Y1 + I) = 0
    couple_y1: float     # I - Y1 = 2 Y2 Y3
    couple_y4: float     # I + Y4 = 2 Y3 Y2

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @property
    def max_residual(self):
        return max(self.as_dict().values())

    def failing(self, tol):
        return [name for name, value in self.as_dict().items() if value > tol]


def check_block_identities(y, p):
    """Evaluate every block identity, normalized by ``max(1, ||Y||_F**2)``."""
    y1, y2, y3, y4 = split_blocks(y, p)
    ip = identity(p)
    iq = identity(y.shape[0] - p)
    scale = max(1.0, float(np.linalg.norm(y, "fro")) ** 2)

    def r(m):
        return float(np.linalg.norm(m, "fro") / scale)

    y2y3 = y2 @ y3
    y3y2 = y3 @ y2
    return BlockIdentityReport(
        ybe_y1=r(y1 @ y1 - y1 - y2y3),
        ybe_y4=r(y4 @ y4 + y4 - y3y2),
        ybe_y2=r((y1 + ip) @ y2 - y2 @ y4),
        ybe_y3=r(y3 @ (y1 + ip) - y4 @ y3),
        inv_y1=r(ip - y1 @ y1 - y2y3),
        inv_y4=r(iq - y4 @ y4 - y3y2),
        inv_y2=r(y1 @ y2 + y2 @ y4),
        inv_y3=r(y3 @ y1 + y4 @ y3),
        quad_y1=r((2 * y1 + ip) @ (y1 - ip)),
        quad_y4=r((2 * y4 - iq) @ (y4 + iq)),
        annihilate_y2=r((2 * y1 + ip) @ y2),
        annihilate_y3=r(y3 @ (2 * y1 + ip)),
        couple_y1=r(ip - y1 - 2 * y2y3),
        couple_y4=r(iq + y4 - 2 * y3y2),
    )
