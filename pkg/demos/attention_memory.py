"""How much affinity memory do the two co-attention variants need?

Vanilla co-attention compares every position with every other position, so
its affinity matrix has (HW)^2 entries. The asymmetric variant compares each
position only with a fixed set of pyramid-pooled anchors (110 of them once the
map is at least 8x8), so it grows linearly in HW.

    python3 demos/attention_memory.py
"""

from refseg.bench import growth_ratios, run_bench
from refseg.coattention import attention_cost

print("analytic affinity elements at C1 = 64")
print(f"{'size':>6} {'vanilla':>14} {'asymmetric':>12} {'ratio':>8}")
for s in (8, 16, 20, 32, 40, 64, 96):
    v = attention_cost("vcm", 64, s, s).affinity_elements
    a = attention_cost("acm", 64, s, s).affinity_elements
    print(f"{s:>4}^2 {v:>14,} {a:>12,} {v / a:>8.1f}")

# A measured run at a reduced channel count so it finishes in a second or two.
# The counts come from the tensor layer's allocation tracker, not from a
# memory profiler, so they are the same on every machine.
rows = run_bench(sizes=(20, 40), C=64, C1=32)
print("\nmeasured peak live elements (C = 64)")
for r in rows:
    print(f"  {r.variant} {r.H}x{r.W}: peak {r.measured_peak:>11,}  affinity {r.measured_affinity:>10,}")
print("\ngrowth 20^2 -> 40^2")
for variant, a, b, ratio in growth_ratios(rows, "measured_peak"):
    print(f"  {variant}: x{ratio:.2f} measured peak")
for variant, a, b, ratio in growth_ratios(rows):
    print(f"  {variant}: x{ratio:.2f} affinity")
