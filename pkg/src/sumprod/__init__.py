"""Rational solutions of x+y+z=a+b+c with xyz=abc, or with x³+y³+z³=a³+b³+c³."""

import sys

# Coordinates of m·P have digit counts quadratic in m; lift the int <-> str digit limit for the whole process
sys.set_int_max_str_digits(0)
