"""tiltlab: exact exchange graphs of hearts, cluster quotients, and braid twists."""

__version__ = "0.1.0"
