"""Coulomb-corrected quantum-orbit strong-field ionization toolkit."""

__version__ = "0.1.0"
