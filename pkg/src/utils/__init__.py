"""Shared helpers: logging, errors, validation and formatting."""
