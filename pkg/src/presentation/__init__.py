"""Presentation layer: command-line front end and MCP server."""
