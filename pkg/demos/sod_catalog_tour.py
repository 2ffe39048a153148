"""Print a few catalog entries with their orders, ranks and Serre orbits.

    python3 demos/sod_catalog_tour.py
"""

from quotcalc import sodcat

for theorem, params in [("quot2", {"m": 3, "n": 6}), ("ell2", {"m": 3, "n": 6}),
                        ("delta3", {"m": 4, "d": 3}), ("pirozhkov", {"n": 5, "d": 2})]:
    entry = sodcat.catalog(theorem, **params)
    ambient, total, ok = sodcat.rank_check(entry)
    print(f"== {theorem} {params}: {len(entry.components)} components")
    print("  ", entry.to_latex())
    print(f"   ranks {total} of {ambient}; order ok: {sodcat.order_check(entry)};"
          f" Serre orbit bijective: {sodcat.serre_bijective(entry)}")

template = sodcat.catalog("conjecture", m=3, n=6, d=3)
print(f"\nconjectural template (m,n,d)=(3,6,3): {len(template.components)} pieces,"
      f" ranks {sodcat.rank_check(template)[1]} of {sodcat.rank_check(template)[0]}")
for c in template.components[:5]:
    print("  ", c.functor, c.source, c.schur_label, "rank", c.rank)
