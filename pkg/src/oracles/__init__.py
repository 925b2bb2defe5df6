from . import bruhat, cones, duality, lifts, projective, toric
from .base import OracleResult

ORACLES = {
    "bruhat": bruhat.run,
    "duality": duality.run,
    "lifts": lifts.run,
    "cones": cones.run,
    "toric": toric.run,
    "projective": projective.run,
}

__all__ = ["ORACLES", "OracleResult"]
