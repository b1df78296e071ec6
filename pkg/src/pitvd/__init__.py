"""Kernelization for vertex deletion into proper-interval-or-tree graphs."""

from .multigraph import MultiGraph

__all__ = ["MultiGraph"]
__version__ = "0.1.0"
