"""Exact evaluation of the lower bound min{rrd, n - 2m/5, n - (2m-5)/3}."""

from __future__ import annotations

from fractions import Fraction

from ..graphs.core import Graph, is_connected
from .search import rrd_number


def eta_terms(g: Graph) -> tuple[Fraction, Fraction, Fraction]:
    if g.n < 3 or not is_connected(g):
        raise ValueError("eta bound is defined for connected graphs with n >= 3")
    n, m = g.n, g.m
    return (
        Fraction(rrd_number(g).value),
        n - Fraction(2 * m, 5),
        n - Fraction(2 * m - 5, 3),
    )


def eta_bound(g: Graph) -> Fraction:
    return min(eta_terms(g))
