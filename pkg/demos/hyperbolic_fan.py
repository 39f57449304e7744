"""
A hyperbolic Cambrian fan
=========================

The group with m(r,s) = 5, m(s,t) = 4, m(r,t) = 2 needs the golden ratio
in its Cartan matrix, yet all arithmetic stays exact in Q(sqrt 5). Below,
the fan property is checked on short elements, then omega signs are compared
with the orientation given by zeta.
"""
import itertools
import time

from cambrian import field as F, groups
from cambrian.fan import fan_check_in_tits
from cambrian.forms import OmegaForm, compatible_reflection_sequence, det3, zeta

W = groups.hyperbolic_542()
print("Cartan matrix:")
for row in W.A:
    print("  ", [str(x) for x in row])

t0 = time.perf_counter()
report = fan_check_in_tits(W, "rst", 6)
print(f"fan check up to length 6: {len(report)} violations ({time.perf_counter() - t0:.1f}s)")

z = zeta(W, "rst")
om = OmegaForm(W, "rst")
roots = W.reflections(6)
agree = sum(F.sign(om(a, b)) == F.sign(det3(a, b, z))
            for a, b in itertools.combinations(roots, 2))
print(f"zeta = {[str(x) for x in z]}")
print(f"omega sign matches det[a|b|zeta] on {agree} of {len(roots) * (len(roots) - 1) // 2} pairs")
print("rstrsts compatible:", compatible_reflection_sequence(W, "rst", "rstrsts"))
