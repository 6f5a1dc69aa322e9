"""Letterplace and co-letterplace ideals of finite posets."""

__version__ = "0.1.0"
