"""
Help text for the wittkit command line.
Contains the grammar notes shown by ``--help`` for each command group.
"""

# Top-level description
program_description = """
Exact arithmetic for big and rational Witt vectors, group rings with
Frobenius lifts, duals of finitely generated abelian groups, Kummer
extensions of cyclotomic fields and finite group cohomology.

Results go to stdout, diagnostics to stderr. Domain errors exit with status 1
and print {"error": ..., "message": ..., "details": ...} on stderr; usage
errors exit with status 2.
"""

# Shared grammar notes
grammar_epilog = """
Ring descriptors:   Z, Q, Z/12, Fp/7, Qzeta/5, Frac(Z)
Series:             ascending powers of t, e.g. "1-2t+3t^2" or "(1-2t)(1-3t)"
Cyclotomic values:  polynomials in z = zeta_N, e.g. "1+z^2"
Fractions:          "(<poly>)/(<poly>)" or a bare polynomial
Groups:             "rank=r;torsion=d1,d2" or a bare torsion list such as "6"
Group ring:         "2[1,0]-[0,3]" or the JSON form
                    {"rank": r, "torsion": [...], "terms": [{"exp": [...], "coeff": c}]}
Matrices:           row-major JSON, e.g. "[[2,4],[6,8]]"

Values that start with '-' must follow '--', e.g. "witt teich --ring Q --depth 3 -- -1/2".
"""

witt_description = """
Truncated big Witt vectors W_N(A): series 1 + a_1 t + ... + a_N t^N.
Addition is series multiplication; multiplication uses the universal
integer polynomials. --json prints {"ring", "N", "tail"}.
"""

wrat_description = """
Rational Witt vectors P/Q with P(0) = Q(0) = 1 over exact integral domains.
--json prints {"ring", "num", "den"} with coefficient strings.
"""

groupring_description = """
The group ring Z[M] of a finitely generated abelian group M, written
additively, with Frobenius lifts [m] -> [p m] and the bridge to rational Witt
vectors [m] -> 1 - eval(m) t.
"""

abelian_description = """
Smith forms, Ext(M, Z), component groups of Pontryagin duals, connected
covers of tori classified by overlattices, and finite solenoid stages.
"""

cohom_description = """
Kummer extensions Q(zeta_N)(a_1^(1/m_1), ...), the Kummer pairing, Hilbert 90
resolvents, group cohomology of finite abelian groups and Galois symbols.
Radicals are written "a^(1/m)"; extension elements are polynomials in y (or
y1, y2, ... for several radicals) with coefficients in z.
"""

verify_description = """
Run the seeded property battery. Suites: witt, wrat, lambda, dual, cohom, all.
The same seed always produces a byte-identical report.
"""
