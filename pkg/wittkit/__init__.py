"""
wittkit: exact arithmetic for big and rational Witt vectors, group rings with
Frobenius lifts, duals of finitely generated abelian groups and small Kummer
extensions.
"""
