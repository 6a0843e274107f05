"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Each case is a random context (objects, attributes, density); both backends
enumerate it and must agree before their timings are reported.
"""

import argparse
import json
import random
import sys
import time

from uum.kernels import available_backends, load_backend

CASES = [
    (40, 16, 0.4),
    (80, 24, 0.4),
    (300, 16, 0.5),
    (60, 60, 0.2),
    (100, 130, 0.08),
]


def random_context(n, m, density, seed):
    rng = random.Random(seed)
    rows = [sum(1 << a for a in range(m) if rng.random() < density) for _ in range(n)]
    cols = [sum(1 << g for g in range(n) if rows[g] >> a & 1) for a in range(m)]
    return rows, cols


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the Python kernel is available", file=sys.stderr)
    results = []
    for k, (n, m, d) in enumerate(CASES):
        rows, cols = random_context(n, m, d, seed=k)
        timings, outputs = {}, {}
        for name in backends:
            mod = load_backend(name)
            outputs[name] = mod.next_closure(rows, cols, n, m, 10**7)
            timings[name] = best_of(lambda: mod.next_closure(rows, cols, n, m, 10**7), args.repeat)
        if len({repr(o) for o in outputs.values()}) != 1:
            raise SystemExit(f"backends disagree on case {(n, m, d)}")
        row = {"objects": n, "attributes": m, "density": d, "concepts": len(outputs[backends[0]][0])}
        row.update({f"{name}_s": timings[name] for name in backends})
        if len(backends) == 2:
            row["speedup"] = timings["python"] / timings["cython"]
        results.append(row)

    if args.json:
        print(json.dumps(results, indent=2))
        return
    header = f"{'objects':>7} {'attrs':>5} {'dens':>5} {'concepts':>9}" + "".join(f" {b + ' s':>10}" for b in backends)
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for r in results:
        line = f"{r['objects']:>7} {r['attributes']:>5} {r['density']:>5} {r['concepts']:>9}"
        line += "".join(f" {r[b + '_s']:>10.4f}" for b in backends)
        if "speedup" in r:
            line += f" {r['speedup']:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
