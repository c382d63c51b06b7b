"""The growth constant of the extension counts, fitted from exact integers.

log e(P_n) grows like (m-b+a-1) n log n + c(m,a,b) n + O(log n).  Because the
counts are exact for any n, the constant can be read off empirically and
compared with its closed form in log-gamma/log-beta terms.  Along a fixed
gap d = b - a > 1 the constant is strictly concave in the glue position and
symmetric about (m-d+1)/2, which orders the counts for large n.
"""

import math

from clusterext import (constant_concavity, constant_gap, crossover_search,
                        empirical_constant, exact_count_sweep, growth_constant)

print("closed-form constants with hand-checkable values:")
for (m, a, b, label, reference) in [(3, 1, 2, "ln 2 - 1", math.log(2) - 1),
                                    (4, 1, 3, "ln 3 - 1", math.log(3) - 1)]:
    const = growth_constant(m, a, b)
    print(f"  c({m},{a},{b}) = {const.value:.12f}   ({label} = "
          f"{reference:.12f}), leading = {const.leading}")
print()

print("empirical fit from exact counts, (5, 2, 4):")
c = growth_constant(5, 2, 4).value
for n in (10, 25, 50, 100):
    est = empirical_constant(5, 2, 4, n)
    print(f"  n = {n:3d}: estimate {est:+.6f}, target {c:+.6f}, "
          f"|diff| {abs(est - c):.6f}  (O(log n / n) expected)")
print()

print("concavity of the constant along a fixed gap (second derivative < 0):")
for d in (2, 3, 4):
    values = [constant_concavity(t, d) for t in (0.0, 1.0, 5.0, 20.0)]
    print(f"  d = {d}: " + ", ".join(f"{v:+.5f}" for v in values))
print()

print("ordering of counts for (6,1,3) vs (6,2,4)  [same gap, shifted]:")
gap = constant_gap(6, 1, 3, 2, 4)
n0 = crossover_search(6, 1, 3, 2, 4, 50)
print(f"  constant gap c(6,2,4) - c(6,1,3) = {gap:.6f} > 0")
print(f"  exact counts strictly ordered from n0 = {n0} up to 50")
first = exact_count_sweep(6, 1, 3, 6, "p")
second = exact_count_sweep(6, 2, 4, 6, "p")
for n in range(1, 7):
    rel = "<" if first[n - 1] < second[n - 1] else ">="
    print(f"  n = {n}: {first[n - 1]} {rel} {second[n - 1]}")
print()
print("with gap d = 1 the constants tie and the order at n = 2 is reversed:")
g412 = exact_count_sweep(4, 1, 2, 2, "p")[1]
g423 = exact_count_sweep(4, 2, 3, 2, "p")[1]
print(f"  e(P_2) for (4,1,2) = {g412}  >  {g423} = e(P_2) for (4,2,3)")
