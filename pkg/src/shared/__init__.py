"""Shared configuration, constants, logging and I/O helpers."""
