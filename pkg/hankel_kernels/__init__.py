"""
Hankel Kernels - exact block Hankel kernels, inner functions and
independency modulo the Nevanlinna class for rational symbols
"""
__version__ = "1.0.0"
