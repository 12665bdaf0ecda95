"""Exact symbolic kernel for U_q(sl2) in its Chevalley and equitable presentations."""

__version__ = "0.1.0"
