"""Exact verification of Hopf algebra integral and antipode identities."""

__version__ = "0.1.0"
