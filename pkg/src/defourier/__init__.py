"""Semi-infinite cosine/sine transforms by double-exponential trapezoidal rules."""

__version__ = "0.1.0"
