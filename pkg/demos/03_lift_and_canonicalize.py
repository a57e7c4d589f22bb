"""Lifting to the generic cover and reducing to the canonical orbit form.

Run:  python3 demos/03_lift_and_canonicalize.py
"""

from crg import (
    GroupParams,
    apply_braid,
    canonicalize_d1n,
    coxeter_element,
    lift_with_delta,
)
from crg.canonical import canonical_projection
from crg.orbits import enumerate_factorizations

params = GroupParams(3, 1, 2)
c = coxeter_element(params)
f = enumerate_factorizations(params, c, 4)[0]
print(f"input factorization in G({params}):")
for t in f.factors:
    print(f"  [{t.element.perm}; {t.element.weights}]")

result = lift_with_delta(f)
lifted = result.factorization
print(f"\nlift to G({lifted.params}) (correction delta = "
      f"[{result.delta.perm}; {result.delta.weights}]):")
for t in lifted.factors:
    print(f"  [{t.element.perm}; {t.element.weights}]")

cf, word = canonicalize_d1n(lifted, params.d)
print(f"\ncanonical form: diagonal weights {cf.diag_weights}, "
      f"{cf.pair_count} zero-twist pairs")
print(f"certificate length: {len(word)} braid letters")
assert apply_braid(lifted, word).factors == cf.realize().factors
print("certificate replay passed")

projected = canonical_projection(cf, params.d)
print(f"\nmod-{params.d} image of the canonical tuple (back in G({params})):")
for t in projected.factors:
    print(f"  [{t.element.perm}; {t.element.weights}]")
