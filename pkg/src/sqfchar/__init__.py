"""Character degrees and codegrees of finite groups, and the square-free gcd hypothesis."""

__version__ = "0.1.0"
