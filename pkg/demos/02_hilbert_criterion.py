# The Hilbert-series criterion on the standard families.

from cypot.catalog import example
from cypot.criterion import cy3_report

cases = [
    ("antisymmetrizer", (3,)),
    ("sklyanin", (1, 1, 1)),
    ("sklyanin", (3, 3, 1)),     # alpha^3 = beta^3 = 27 gamma^3: excluded
    ("cubic_typeA", (1, 1, 1)),
    ("yang_mills", (2, 0)),
    ("potencyN", (2,)),          # w = x^3
]

for name, args in cases:
    w, spec = example(name, *args)
    rep = cy3_report(w, spec.n, 6)
    print("%-16s %-12s tag=%-11s %s" % (name, args, spec.tag, rep.verdict))
    if rep.hilbert:
        print("    dims   ", rep.hilbert)
        print("    series ", rep.target)

# x^3 fails in degree 4: A = k[x]/(x^2) has no room for the t^4 term
w, _ = example("potencyN", 2)
rep = cy3_report(w, 1, 6, short_circuit=False)
print()
print(rep.summary())
