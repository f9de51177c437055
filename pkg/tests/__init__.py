"""Automated tests for scramble-attack."""
