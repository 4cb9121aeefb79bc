"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--steps N]

Times the spinor map over a batch of matrices, the path lift on a long
rotation/boost path and a full ``project`` call with each backend, then checks
that both backends agree.
"""
import argparse
import timeit

import numpy as np

from wedgecover import _kernels_py, cover, kernels
from wedgecover.cover import PairElement, project
from wedgecover.lorentz import make_boost, make_rotation
from wedgecover.minkowski import E1, E2, E3
from wedgecover.wedge import act, standard_wedge

try:
    from wedgecover import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def sample_inputs(steps, rng):
    a = rng.normal(size=(steps, 2, 2)) + 1j * rng.normal(size=(steps, 2, 2))
    a /= np.sqrt(np.linalg.det(a))[:, None, None]
    s = np.linspace(0.0, 1.0, steps + 1)
    path = np.array([make_rotation(E3, 5.0 * t) @ make_boost(E1, 1.5 * t) for t in s])
    wedge_a = act(make_rotation(E2, 2.0) @ make_boost(E3, 0.8), standard_wedge(E1))
    return a, path, PairElement(wedge_a, standard_wedge(E2))


def run_backend(impl, a, path, pair, repeat):
    # project() reaches the kernels through the dispatch module
    kernels.spinor_map, kernels.local_lift, kernels.lift_path = impl.spinor_map, impl.local_lift, impl.lift_path
    times = {
        "spinor_map": min(timeit.repeat(lambda: [impl.spinor_map(x) for x in a], number=1, repeat=repeat)),
        "lift_path": min(timeit.repeat(lambda: impl.lift_path(path), number=1, repeat=repeat)),
        "project": min(timeit.repeat(lambda: project(pair), number=1, repeat=repeat)),
    }
    return times, impl.lift_path(path)[0], project(pair)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    parser.add_argument("--steps", type=int, default=4096)
    args = parser.parse_args()
    a, path, pair = sample_inputs(args.steps, np.random.default_rng(0))
    saved = kernels.spinor_map, kernels.local_lift, kernels.lift_path
    backends = [("python", _kernels_py)] + ([("compiled", _kernels_c)] if _kernels_c else [])
    results = {}
    try:
        for name, impl in backends:
            results[name] = run_backend(impl, a, path, pair, args.repeat)
    finally:
        kernels.spinor_map, kernels.local_lift, kernels.lift_path = saved

    print(f"default backend: {kernels.BACKEND}; steps={args.steps}, trust radius {cover.TRUST_RADIUS}")
    print(f"{'kernel':<12}" + "".join(f"{name:>14}" for name, _ in backends) + ("   speedup" if len(backends) == 2 else ""))
    for key in ("spinor_map", "lift_path", "project"):
        row = [results[name][0][key] for name, _ in backends]
        line = f"{key:<12}" + "".join(f"{t * 1e3:>11.3f} ms" for t in row)
        if len(row) == 2:
            line += f"   {row[0] / row[1]:>6.1f}x"
        print(line)
    if len(backends) == 2:
        lift_diff = float(np.max(np.abs(results["python"][1] - results["compiled"][1])))
        proj_diff = cover.cover_distance(results["python"][2], results["compiled"][2])
        print(f"backend agreement: lift_path {lift_diff:.1e}, project {proj_diff:.1e}")
    else:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
