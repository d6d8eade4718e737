"""
Potential coefficients and the sharp mad threshold
==================================================

"""

from ifk_partition import coefficients, f_threshold

# the edge weight C_E and the U_0 weight fix the threshold 2 C_U0 / C_E
for k in range(2, 9):
    t = coefficients(k)
    print(f"k={k}  C_E={t.C_E:3d}  C_U0={t.cu(0):3d}  C_I={t.C_I:3d}  f(k)={f_threshold(k)}")

# F_j coefficients drop by 3 per step, then switch to 3(k - j) in the high regime
t = coefficients(7)
print("F weights for k=7:", list(t.C_F))

# the threshold creeps toward 3 as k grows
print(float(f_threshold(64)))
