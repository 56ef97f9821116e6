"""Reporting tools for cat2chain."""

__all__ = ["report"]
