"""Exact tube-volume polynomials of convex bodies and their root location."""
from __future__ import annotations

__version__ = "0.1.0"

from .scalars import (  # noqa: F401
    PiHalfValue,
    gamma_half,
    sign_and_float,
    unit_ball_volume,
)
from .polynomials import (  # noqa: F401
    ExactPoly,
    jensen_polynomial,
    m_product,
    m_product_integral_check,
)
from .bodies import (  # noqa: F401
    Adjoint,
    Ball,
    CrossMeasures,
    Cube,
    Ellipsoid,
    FromMeasures,
    Product,
    ambient_dimension,
    minkowski_polynomial,
)
from .weyl import (  # noqa: F401
    adjoint_weyl_reduction,
    weyl_coefficients,
    weyl_index_p,
)
from .rootloc import (  # noqa: F401
    classify,
    counterexample_search,
    hurwitz_determinants,
    numeric_roots,
)
from .entire import (  # noqa: F401
    SeriesSpec,
    closed_form_eval,
    series_eval,
    taylor_coefficients,
    truncation_root_trend,
)
from .mc import (  # noqa: F401
    compare_oracle,
    tube_volume_estimate,
)
from .errors import (  # noqa: F401
    ConsistencyError,
    PreconditionError,
    UnsupportedExactError,
)
