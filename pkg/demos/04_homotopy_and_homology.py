"""Homotopy modules of the skeleton and the second homology of the
presented quotient, each by two independent routes.

Run:  python3 demos/04_homotopy_and_homology.py
"""

from xsq import (ConstructionData, QQ, aq_h2, aq_h2_witness, build_skeleton,
                 compare_XY, homotopy_report, pi1)

data_b = ConstructionData(QQ, ["x", "y"],
                          [("S1", "x^2"), ("S2", "x*y")], [])
data_c = ConstructionData(QQ, ["x", "y"],
                          [("S1", "x^2"), ("S2", "x*y")],
                          [("T", "y*S1 - x*S2")])

print("== two relations, nothing above ==")
skel_b = build_skeleton(data_b)
print(homotopy_report(skel_b, D=6, D_h2=8).to_text())

print()
print("== the same relations with the syzygy class killed ==")
skel_c = build_skeleton(data_c)
print(homotopy_report(skel_c, D=6, D_h2=8).to_text())
print("the first homotopy row drops to zero: the adjoined generator")
print("kills the class that the second homology detects, while the")
print("homology of the presented quotient itself is unchanged.")

print()
print("== routes really are independent ==")
print("pi1 by elimination:      ", pi1(skel_b, 6, "ideal"))
print("pi1 by linear algebra:   ", pi1(skel_b, 6, "pair"))
print("H2 by syzygy machinery:  ", aq_h2(data_b, "syzygy", 8))
print("H2 by direct kernels:    ", aq_h2(data_b, "kernel", 8))
w = aq_h2_witness(data_b)
print("witness class:            (%s)" % ", ".join(str(p) for p in w))

print()
print("== the split comparison of the two complexes on the tensor ==")
print(compare_XY(skel_b, D=6).to_text())
