"""
Exact-arithmetic laboratory for the meta and trio Hahn algebras, the Hahn
polynomials and rational functions they produce, and the Leonard pairs and
trios of their polynomial realizations.
"""
