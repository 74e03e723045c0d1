"""Hilbert forms - norm bounds and checks for Hilbert-type bilinear forms"""

__version__ = "1.0.0"
__author__ = "Hilbert Forms Development Team"
