"""
Multicompositions: k-compositions in colored-parts, internal-zeros and
marker-board form, with exact counting, restricted families, generating
functions, k-Jacobsthal / k-Pell diagonals and the cluster expansion of
g-exclusion statistics.
"""

__version__ = "1.0.0"
