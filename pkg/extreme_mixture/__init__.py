"""Exact solver and certificates for affine problems over mixtures of extreme points."""

from .solver import solve, lift, degenerate_solve, Solution, Branch
