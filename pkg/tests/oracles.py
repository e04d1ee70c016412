"""Slow, dependency-free reference implementations used as test oracles.

Everything here works on plain Python floats straight from the definitions:
attendance probability, expected attendance, total utility, and gain as a
utility difference.  Nothing is shared with the package's numpy code.
"""
from itertools import combinations, product


def _col(matrix, i):
    return [float(x) for x in matrix[i]]


def attendance(inst, pairs, u, e, t):
    here = [x for x, y in pairs if y == t]
    assert e in here
    den = sum(float(inst.competing_interest[c][u])
              for c in range(inst.num_competing) if inst.competing_interval[c] == t)
    den += sum(float(inst.event_interest[x][u]) for x in here)
    if den == 0:
        return 0.0
    return float(inst.activity[t][u]) * float(inst.event_interest[e][u]) / den


def expected_attendance(inst, pairs, e, t):
    return sum(attendance(inst, pairs, u, e, t) for u in range(inst.num_users))


def utility(inst, pairs):
    return sum(expected_attendance(inst, pairs, e, t) for e, t in pairs)


def gain(inst, pairs, e, t):
    return utility(inst, list(pairs) + [(e, t)]) - utility(inst, pairs)


def feasible(inst, pairs):
    events = [e for e, _ in pairs]
    if len(set(events)) != len(events):
        return False
    for t in range(inst.num_intervals):
        here = [e for e, y in pairs if y == t]
        locs = [int(inst.event_location[e]) for e in here]
        if len(set(locs)) != len(locs):
            return False
        if sum(float(inst.event_resources[e]) for e in here) > inst.theta + 1e-9:
            return False
    return True


def best_schedule(inst):
    """Exhaustive optimum (value, pairs) for tiny instances."""
    best = (float("-inf"), None)
    for subset in combinations(range(inst.num_events), inst.k):
        for place in product(range(inst.num_intervals), repeat=inst.k):
            pairs = list(zip(subset, place))
            if feasible(inst, pairs):
                v = utility(inst, pairs)
                if v > best[0]:
                    best = (v, pairs)
    return best


def greedy(inst):
    """Textbook greedy: at each step rescore every valid pair from scratch."""
    pairs = []
    while len(pairs) < inst.k:
        cands = []
        for e in range(inst.num_events):
            if any(e == x for x, _ in pairs):
                continue
            for t in range(inst.num_intervals):
                if feasible(inst, pairs + [(e, t)]):
                    cands.append((-gain(inst, pairs, e, t), e, t))
        if not cands:
            return pairs
        _, e, t = min(cands)
        pairs.append((e, t))
    return pairs


def greedy_choices(inst, pairs, tol=1e-12):
    """Valid pairs whose gain is within ``tol`` of the best possible next gain."""
    scheduled = {e for e, _ in pairs}
    scored = [(gain(inst, pairs, e, t), e, t)
              for e in range(inst.num_events) if e not in scheduled
              for t in range(inst.num_intervals) if feasible(inst, list(pairs) + [(e, t)])]
    if not scored:
        return set()
    top = max(g for g, _, _ in scored)
    return {(e, t) for g, e, t in scored if g >= top - tol}
