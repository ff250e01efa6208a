"""Example corpus: diagram builders, committed data files, and expected
invariant fixtures."""

from .builders import (  # noqa: F401
    singular_K,
    spun_trefoil_data,
    stevedore_data,
    suciu_data,
    twist_spun_torus,
)
