"""
A small sweep over k
====================

Gain computations grow with k for ALG and INC; HOR needs a single round of
initial scores while k fits in the number of intervals.
"""
import io

from sesched import GenParams
from sesched.sweep import SweepConfig, run_sweep, write_csv

config = SweepConfig(GenParams(num_users=300, num_events=60, num_intervals=30), "k",
                     (10, 20, 40), solvers=("ALG", "INC", "HOR", "HOR-I", "RAND"),
                     repetitions=2, seed=1, record_time=False)
rows = run_sweep(config)

for k in config.values:
    cells = [r for r in rows if r["k"] == k and r["rep"] == 0]
    print(f"k={k:>3}: " + ", ".join(f"{r['solver']} {r['score_computations']}" for r in cells))

buf = io.StringIO()
write_csv(rows, buf)
print(buf.getvalue().splitlines()[0])
