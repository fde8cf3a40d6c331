"""Light-cone scattering numerics for the J0-kernel transform.

The package realises the unitary, self-reciprocal, scale-reversing
transform with kernel J0(2 sqrt(xy)) as the past-to-future light-cone
scattering of finite-energy Klein-Gordon waves on the Rindler wedge,
and cross-validates it along three independent routes: direct
oscillatory quadrature, Mellin-domain multipliers, and wave-packet
boundary traces.
"""

from . import (cli, debranges, errors, htransform, kleingordon, quadrature,
               sampling, scattering, specfun, verify)
from .errors import WedgewaveError
from .htransform import (h_transform, h_transform_point, h_via_mellin,
                         hankel0_transform, mellin_transform)
from .kleingordon import (CauchyData, ConeTraces, EnergyMomentum, WavePacket,
                          gaussian_packet)
from .quadrature import DecayHint, QuadratureResult
from .sampling import CriticalLineSamples, SampledFunction

__all__ = [
    "cli", "debranges", "errors", "htransform", "kleingordon", "quadrature",
    "sampling", "scattering", "specfun", "verify",
    "WedgewaveError", "DecayHint", "QuadratureResult", "SampledFunction",
    "CriticalLineSamples", "WavePacket", "CauchyData", "ConeTraces",
    "EnergyMomentum", "gaussian_packet", "h_transform", "h_transform_point",
    "h_via_mellin", "hankel0_transform", "mellin_transform",
]

__version__ = "0.1.0"
