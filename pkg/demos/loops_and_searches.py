"""Iterated digit maps and a couple of bounded searches."""
from seqlab import arith_functions as af
from seqlab import explorer as ex

for start, width in ((52, 2), (100, 3), (1019, 4)):
    r = ex.periodic_loop("reverse_subtract", start, width)
    print(f"|n - reverse(n)| from {start}: tail {r.tail}, cycle {r.cycle}")

print("\nS(1..20):", [af.S(n) for n in range(1, 21)])
print("Z(1..20):", [af.Z(n) for n in range(1, 21)])
print("triplets below 1e5:", ex.triplet_search(10**5))
print("C(8, k):", [ex.carpet_C(8, k) for k in range(9)])
