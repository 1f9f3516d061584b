"""Enumeration and backtracking engines."""
