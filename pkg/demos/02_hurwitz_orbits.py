"""The braid action on factorization tuples, orbit search, certificates.

Run:  python3 demos/02_hurwitz_orbits.py
"""

from crg import (
    GroupParams,
    apply_braid,
    coxeter_element,
    invariant_multiset,
    orbit_bfs,
    same_orbit,
    verify_main_theorem,
)
from crg.orbits import enumerate_factorizations

params = GroupParams(2, 1, 2)
c = coxeter_element(params)
facts = enumerate_factorizations(params, c, 4)
print(f"G({params}): {len(facts)} reflection factorizations of c at length 4")

f = facts[0]
labels = sorted(str(label) for label in invariant_multiset(f).elements())
print(f"\nfirst factorization has class multiset {labels}")

orbit = orbit_bfs(f)
print(f"its Hurwitz orbit has {len(orbit)} members")

g = list(orbit.members.values())[-1]
word = same_orbit(f, g)
print(f"certificate braid word from the first to the last member: {word}")
assert apply_braid(f, word).key() == g.key()
print("replay check passed")

report = verify_main_theorem(params, 4)
print(f"\norbit partition vs invariant partition at length 4: "
      f"{report.orbit_count} orbits, {report.class_multiset_count} multisets, "
      f"match={report.match}")
