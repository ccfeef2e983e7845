"""Compare the gmpy2 and Fraction scalar backends on typical workloads.

Each backend runs in its own interpreter because the scalar type is fixed at
import time (see PLGROUPS_BACKEND).

    python3 benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, timeit
from plgroups import THOMPSON, numeric
from plgroups.commdec import two_commutators
from plgroups.sampling import random_element, random_v_element
from plgroups.serialize import parse_plmap, serialize_plmap

rng = random.Random(7)
triples = [[random_v_element(THOMPSON, rng) for _ in range(3)] for _ in range(200)]
lists = [[(random_element(THOMPSON, rng, 2), random_element(THOMPSON, rng, 2)) for _ in range(4)] for _ in range(10)]
texts = [serialize_plmap(random_element(THOMPSON, rng, 6)) for _ in range(200)]

def compose():
    for f, g, h in triples:
        (f * g) * h.inverse()

def commutators():
    for pairs in lists:
        two_commutators(pairs)

def parse():
    for t in texts:
        parse_plmap(t)

repeat = {repeat}
out = {{"backend": numeric.BACKEND}}
for name, fn in (("compose 200 triples", compose), ("two_commutators 10 lists", commutators),
                 ("parse 200 maps", parse)):
    out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
print(json.dumps(out))
"""


def run(backend, repeat):
    env = dict(os.environ, PLGROUPS_BACKEND=backend)
    proc = subprocess.run([sys.executable, "-c", WORKER.format(repeat=repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run("gmpy2", args.repeat), run("fraction", args.repeat)
    if fast["backend"] != "gmpy2":
        print("gmpy2 is not importable; both runs used Fraction")
    print(f"{'workload':<28}{'gmpy2 (s)':>12}{'fraction (s)':>14}{'speedup':>10}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:<28}{fast[key]:>12.3f}{slow[key]:>14.3f}{slow[key] / fast[key]:>9.1f}x")


if __name__ == "__main__":
    main()
