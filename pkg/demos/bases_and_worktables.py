"""Encode a few numbers in generalized bases and show a multiplication worktable."""
from seqlab import radix_systems as rs

for name in ("prime", "square", "factorial", "triangular"):
    base = rs.get_base(name)
    shown = ", ".join(f"{n}={rs.encode(n, base)}" for n in (10, 49, 100))
    print(f"{name:>10}: {shown}")

product, table = rs.romanian_multiply(73, 97, 3)
print("\n73 x 97 halving by 3:")
print(table.render())

q, r, _ = rs.divide_by_power(1357, 2, 7)
print(f"\n1357 = {q} * 2^7 + {r}")
