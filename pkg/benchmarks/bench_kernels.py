"""Times both kernel backends on the full six-vertex canonical scan.

The workload is the hot loop of class enumeration: one canonical key per
coset representative, each key a minimum over the whole automorphism
group. Usage: python benchmarks/bench_kernels.py [repeats]
"""

import sys
import time

from switchiso.classify import _coset_rep_masks
from switchiso.graphs import automorphism_group, builtin_graph
from switchiso.kernels import available_backends
from switchiso.signatures import cut_space_basis


def main() -> None:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    g = builtin_graph("complete", 6)
    group = automorphism_group(g)
    basis = cut_space_basis(g)
    perms = tuple(a.edges for a in group.elements)
    masks = _coset_rep_masks(g)
    print(
        f"complete:6 scan: {len(masks)} coset representatives, "
        f"group order {group.order}, best of {repeats}"
    )
    timings: dict[str, float] = {}
    keys: dict[str, list[int]] = {}
    for name, module in sorted(available_backends().items()):
        scanner = module.CanonicalScanner(perms, basis.pivots, basis.rows, g.m)
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            keys[name] = scanner.canonical_keys(masks)
            best = min(best, time.perf_counter() - start)
        timings[name] = best
        print(f"  {name:>8}: {best * 1000:9.2f} ms per scan")
    if len(keys) == 2:
        assert keys["python"] == keys["compiled"], "backends disagree"
        print(f"  backends agree; speedup {timings['python'] / timings['compiled']:.1f}x")


if __name__ == "__main__":
    main()
