"""Simulated sessions, trace files, and framed handshake captures."""
