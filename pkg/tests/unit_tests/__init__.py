"""Unit tests for scramble-attack.

The folders mirror the sub-packages of src/scramble_attack. Attack tests run on the
reduced W=12, n=2^10-1 domain so they stay fast and can be checked against exhaustive search.
Anything on the real engine parameters lives in functional_tests and is marked slow.
"""
