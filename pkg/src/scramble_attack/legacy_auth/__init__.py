"""Bit-exact legacy authentication primitives and the linear forms the attack reads them through."""
