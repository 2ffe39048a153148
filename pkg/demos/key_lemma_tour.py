"""Walk through one Lascoux-type complex and its checks.

    python3 demos/key_lemma_tour.py
"""

from quotcalc import keylemma as kl
from quotcalc.partitions import fmt

kin = kl.KeyLemmaInput(m=2, n=5, d_plus=2, d_minus=1, alpha=(1,))
print(f"input: m={kin.m} n={kin.n} d+={kin.d_plus} d-={kin.d_minus} alpha={fmt(kin.alpha)}")
print(f"l+ = {kin.ell_plus}, l- = {kin.ell_minus}, gap = {kin.gap}")

print("\nindex set B(alpha):")
for d in kl.enumerate_B_alpha(kin):
    print(f"  gamma={fmt(d.gamma):8} x={d.x} tau={fmt(d.tau):6} theta={fmt(d.theta):6} H^{d.ell} at p={d.p}")

F = kl.key_complex_F(kin)
print("\nterms of F:")
for p in F.degrees():
    print(f"  F^{p}: rank {F.rank(p)}")
print("agrees with the brute force sweep over every gamma:", F == kl.brute_force_complex(kin))

for j in range(kin.gap + 1):
    tw = kl.twisted_complex(kin, j)
    target = kl.distinguished_twisted_gamma(kin.alpha, j, kin.d_minus)
    print(f"twist j={j}: degrees {tw.degrees()}, distinguished summand S^{fmt(target)} at p={-kin.d_minus * j}")

print("\nLaTeX:")
print(F.to_latex())
