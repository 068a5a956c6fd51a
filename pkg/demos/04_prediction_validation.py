"""The association matrix is the expected confusion matrix.

A proportional predictor answers with a draw from the conditional
distribution of the response given the explanatory value.  Fit the
association matrix on a training split, predict proportionally on the
held-out split, tally the confusion rates by true category: the two
matrices agree up to sampling noise.  For calibration, a reference
association matrix for a six-category response is included with the
fixtures (``SIXCAT_REFERENCE_GAMMA``); its diagonal shows how modest
per-category accuracies can be even for a usable explanatory variable.

Run:  python demos/04_prediction_validation.py
"""

import numpy as np

from catassoc import joint_from_counts, proportional_predict, sample_joint, split_validate
from catassoc.fixtures import SIXCAT_REFERENCE_GAMMA
from catassoc.report import fmt4, gamma_vs_confusion_text

# A six-category response over a known joint, at the scale of a
# realistic administrative dataset.
rng = np.random.default_rng(0)
w = np.array([0.19, 0.18, 0.17, 0.16, 0.15, 0.15])
m = np.full((6, 6), 0.005) * w[:, None]
np.fill_diagonal(m, 0.975 * w)
known = joint_from_counts(m)

ds = sample_joint(known, 24_000, seed=1)
res = split_validate(ds, "X", "Y", train_frac=0.8, seed=1)
print("80/20 split of 24,000 records:")
print(gamma_vs_confusion_text(res.train_gamma, res.test_confusion.normalized,
                              res.train_gamma.y_domain))
print(f"max entrywise difference: {fmt4(res.max_abs_diff)} "
      f"(train {res.n_train}, test {res.n_test}, "
      f"unseen skipped {res.skipped_unseen})")

print("\nsingle proportional predictions from one conditional:")
j = joint_from_counts(np.array([[0.6, 0.3, 0.1]]), x_domain=("cell",),
                      y_domain=("a", "b", "c"))
draws = [proportional_predict(j, "cell", rng) for _ in range(2000)]
for lab, p in zip("abc", (0.6, 0.3, 0.1)):
    print(f"  predicted {lab}: {draws.count(lab) / 2000:.3f} (conditional {p})")

print("\nreference six-category association matrix (2 dp):")
print(np.array2string(SIXCAT_REFERENCE_GAMMA, precision=2))
print(f"diagonal (per-category expected accuracy): "
      f"{np.round(np.diag(SIXCAT_REFERENCE_GAMMA), 2)}")
print("off-diagonal columns read as second-type error rates: the column")
print("for a category collects the rates of predicting it wrongly.")
