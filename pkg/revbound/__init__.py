"""revbound: numerical verification of reverse uncertainty relations."""

__version__ = "0.1.0"
