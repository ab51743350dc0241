"""
Wiretap TAS
===========
Secrecy performance of massive MIMOME wiretap channels under norm-based
transmit antenna selection.

Sub-packages:
- mathkit: special functions and scalar root finding
- channel: finite-dimensional channel model, selection protocol and rates
- asymptotic: large-system Gaussian approximation of the secrecy rate
- optimization: optimal number of selected antennas
- montecarlo: reproducible trial harness
- cli: JSON-driven command-line front end
"""

__version__ = "0.1.0"
