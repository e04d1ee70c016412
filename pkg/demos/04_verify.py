"""
Randomized self-checks
======================

The verification suite solves a stream of small random instances and checks
the relations that must hold between solvers.  Injecting a fault shows that
the checks actually bite.
"""
from sesched.verify import run_verification

result = run_verification(trials=50, seed=0)
print(result.summary())

broken = run_verification(trials=50, seed=0, fault="inc-tiebreak")
print()
print(broken.summary().splitlines()[-1], "with the INC tie-break reversed,",
      len(broken.failures), "violations")
