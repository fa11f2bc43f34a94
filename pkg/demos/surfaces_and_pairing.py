"""Build both surface models and look at the intersection numbers of the loops."""

from collections import Counter

from icosamono import surfaces

for model in ("sigma", "pi"):
    cx = surfaces.build(model)
    hb = surfaces.homology(model)
    print(f"{model}: cells {(cx.n0, cx.n1, cx.n2)}, chi {cx.euler_characteristic}, H1 rank {hb.rank}")

    trc = [cx.truncation_cycle(x) for x in range(len(cx.base.vertices))]
    edge = [cx.edge_cycle(y) for y in range(60)]
    counts = Counter(cx.intersection(a, b) for a in trc for b in edge)
    print("  truncation loop . edge loop values:", dict(sorted(counts.items())))

    vals = surfaces.structured_cycles(model)
    row = [cx.intersection(vals["edge"], t) for t in trc]
    print("  edge map against the truncation loops:", row)
