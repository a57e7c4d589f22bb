"""Tour of the basic arithmetic: wreath elements, reflections, Coxeter data.

Run:  python3 demos/01_groups_and_reflections.py
"""

from crg import (
    GroupParams,
    class_label,
    coxeter_element,
    coxeter_number,
    element_order,
    enumerate_reflections,
    multiply,
)

params = GroupParams(3, 1, 2)
print(f"group G({params}) of order {params.order}")

print("\nreflections, with conjugacy-class labels:")
for r in enumerate_reflections(params):
    e = r.element
    print(f"  [{e.perm}; {e.weights}]  kind={r.kind:13s}  class={class_label(r, params)}")

c = coxeter_element(params)
data = coxeter_number(params)
print(f"\nstandard Coxeter element c = [{c.perm}; {c.weights}]")
print(f"|T| = {data.reflection_count}, |A| = {data.hyperplane_count}, "
      f"h = {data.h}, order(c) = {element_order(c)}")

r1, r2 = enumerate_reflections(params)[:2]
print("\nsample product of two reflections:")
p = multiply(r1.element, r2.element)
print(f"  [{r1.element.perm}; {r1.element.weights}] * "
      f"[{r2.element.perm}; {r2.element.weights}] = [{p.perm}; {p.weights}]")
