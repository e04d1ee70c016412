"""
Synthetic instances
===================

The generator draws locations, resource needs, competing events and user
interest.  Interest can be uniform, normal or Zipf shaped.
"""
import numpy as np

from sesched import GenParams, generate

params = GenParams(k=20, num_users=500, seed=7)
print(params.resolved())

for dist in ("uniform", "normal", "zipf"):
    inst = generate(GenParams(k=20, num_users=500, interest_dist=dist, seed=7))
    mu = inst.event_interest
    print(f"{dist:>8}: mean interest {mu.mean():.3f}, share above 0.5 {np.mean(mu > 0.5):.3f}")

# the same seed gives the same instance
a = generate(params)
b = generate(params)
print("deterministic:", np.array_equal(a.event_interest, b.event_interest))
