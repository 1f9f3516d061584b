"""Exact arithmetic on integer symmetric bilinear forms."""
