"""
Comparing the solvers
=====================

All six solvers on one generated instance.  ALG and INC return the same
schedule, as do HOR and HOR-I; the incremental variants get there with fewer
gain computations.
"""
from sesched import SOLVERS, GenParams, generate, solve

inst = generate(GenParams(k=30, num_users=1000, seed=3))
print("k, events, intervals, users:", inst.summary())

schedules = {}
print(f"{'solver':<6} {'utility':>10} {'computations':>14} {'updates':>8} {'ms':>8}")
for name in SOLVERS:
    schedule, rep = solve(inst, name)
    schedules[name] = schedule.pairs()
    print(f"{name:<6} {rep.utility:10.2f} {rep.score_computations:14d} "
          f"{rep.update_evaluations:8d} {rep.elapsed_ms:8.1f}")

print("INC == ALG:", schedules["INC"] == schedules["ALG"])
print("HOR-I == HOR:", schedules["HOR-I"] == schedules["HOR"])
