"""Sol Sapphire - exact computations on sapphire Sol 3-manifolds"""

__version__ = "0.1.0"
