"""Two ways a canonization can fail to help, measured exactly.

A sign canonization with a jump at 1/2 tears one ball into two, so its
image needs as many covering balls as the raw set. Lexsort is continuous
almost everywhere but not Lipschitz: a hairline coordinate change can
swap the column order and move the representative a long way.
"""

import numpy as np

from canoncover import (canon_c1, canon_lexsort, dist_inf, exact_cover_number,
                        perm_quotient_bottleneck, two_ball_set)

pts = two_ball_set()
print("set: +/-{0.40, 0.45, 0.50, 0.55, 0.60}, radius 0.1 balls")
print("raw covering number:        ", exact_cover_number(pts, "inf", 0.1))

mapped = [np.array([[canon_c1(float(p[0, 0]))]]) for p in pts]
print("after c1 (jump at 1/2):     ", exact_cover_number(mapped, "inf", 0.1))
print("sign-quotient metric:       ", exact_cover_number(pts, "sign:inf", 0.1))

# c1 sends 0.45 -> -0.45 but 0.55 -> 0.55: the positive ball lands on
# both sides of zero, so two balls are still needed.
print("c1 image:", sorted(float(p[0, 0]) for p in mapped))

# lexsort: two clouds a hair apart whose representatives are far apart
X = np.array([[0.5, 0.5], [0.0, 1.0]])
Y = np.array([[0.49, 0.51], [1.0, 0.0]])
q = perm_quotient_bottleneck(X, Y)
c = dist_inf(canon_lexsort(X).cloud, canon_lexsort(Y).cloud)
print(f"\nlexsort witness: orbit distance {q}, canonized distance {c}")
