"""Two block-matrix inequalities behind the bounds, on random input."""

import numpy as np

from qgbounds import check_block_lemma

rng = np.random.default_rng(0)
worst = []
for _ in range(200):
    X = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    r = check_block_lemma(X + X.conj().T, [2, 1, 3])
    worst.append((r.block_eigen, r.trace_split))
print("smallest slacks", np.min(worst, axis=0))
