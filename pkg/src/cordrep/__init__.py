"""Augmentations of the framed cord algebra of braid closures and their
link-group representations."""

__version__ = "0.1.0"
