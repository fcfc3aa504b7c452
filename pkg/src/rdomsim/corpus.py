"""Built-in experiment corpus used by the acceptance suite."""

from __future__ import annotations

from typing import Dict, List


def builtin_corpus() -> List[Dict]:
    """Default corpus: every entry is one experiment spec for the CLI.

    Covers cycles (every admissible r), seeded random trees, a path,
    subdivided K_4 (planar, expansion bound 3), the tightness family, the
    cycle independent-set reduction, and one low-girth negative control.
    """
    specs: List[Dict] = []
    for n in (11, 23, 51):
        for r in range(1, (n - 3) // 4 + 1):
            specs.append({"family": "cycle", "n": n, "r": r, "f_r": 1,
                          "algo": "rmds"})
    for n in (50, 200):
        for seed in (1, 2, 3):
            for r in (1, 2, 3):
                specs.append({"family": "tree", "n": n, "seed": seed, "r": r,
                              "f_r": 1, "algo": "rmds"})
    for r in (1, 2, 3):
        specs.append({"family": "path", "n": 50, "r": r, "f_r": 1,
                      "algo": "rmds"})
    for k, r_max in ((2, 1), (4, 3), (6, 4)):
        for r in range(1, r_max + 1):
            specs.append({"family": "subdivided_k4", "k": k, "r": r,
                          "f_r": 3, "algo": "rmds"})
    for r, f in ((1, 2), (2, 2)):
        specs.append({"family": "tightness", "r": r, "f": f, "f_r": f,
                      "algo": "rmds", "m": "family"})
    for n in (25, 49):
        for r in (1, 2):
            for source in ("rmds", "trivial"):
                specs.append({"family": "cycle", "n": n, "r": r, "f_r": 1,
                              "algo": "cycle_is", "d_source": source})
    # Negative control: C_4 breaks the girth premise; the cell of the single
    # supplied center contains a cycle, so the cells-tree flag must be false.
    specs.append({"family": "cycle", "n": 4, "r": 1, "f_r": 1, "algo": "rmds",
                  "allow_low_girth": True, "m": [0]})
    return specs
