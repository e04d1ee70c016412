"""
The four-event running example
==============================

Two intervals, four candidate events, two users and one competing event per
interval.  We follow ALG selection by selection and print the score table.
"""
from sesched import running_example, solve_alg, solve_exact

inst = running_example()
print("k, events, intervals, users:", inst.summary())

# ALG records every score it looks at; each row is one selection
trace = []
schedule, report = solve_alg(inst, trace=trace)
for step, row in enumerate(trace, start=1):
    cells = ", ".join(f"{inst.event_ids[e]}@{inst.interval_ids[t]}={s:.4f}"
                      for (e, t), s in sorted(row["scores"].items()))
    e, t = row["select"]
    print(f"step {step}: {cells}")
    print(f"   -> pick {inst.event_ids[e]}@{inst.interval_ids[t]}")

print("schedule:", [(inst.event_ids[e], inst.interval_ids[t]) for e, t in schedule.pairs()])
print("utility: %.4f  score computations: %d" % (report.utility, report.score_computations))

# the exhaustive optimum is small enough to find here
best, value = solve_exact(inst)
print("exact optimum: %.4f, greedy reaches %.1f%%" % (value, 100 * report.utility / value))
