"""
Common type definitions for the application.
"""

from typing import Literal, TypeAlias

import numpy as np
import numpy.typing as npt

RealArray: TypeAlias = npt.NDArray[np.float64]
ComplexArray: TypeAlias = npt.NDArray[np.complex128]

Geometry: TypeAlias = Literal["step", "barrier"]
SamplingMode: TypeAlias = Literal["gaussian", "born"]
FreeBranches: TypeAlias = Literal["positive", "both"]
