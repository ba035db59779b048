#!/usr/bin/env python3
"""
theta-calc - Main Entry Point
Exact Chern class and Fourier-Mukai calculus on principally polarized
abelian varieties, with the Jacobian criteria run as arithmetic checks.

    python main.py fm --g 3 --ch 0,0,1,4 --wit 0
    python main.py verify-paper --format json
"""
import sys

from cli.runner import run

if __name__ == "__main__":
    sys.exit(run())
