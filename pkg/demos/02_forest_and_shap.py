"""
Random-forest classification and exact SHAP attribution
=======================================================

Fit the classifier on a cohort with known signal, measure discrimination
with stratified cross-validation, and explain each prediction with exact
path-dependent TreeSHAP. The attribution is additive: for every record,
base + sum(phi) reconstructs the predicted probability to machine
precision, so feature importances are grounded in the model itself.
"""

import numpy as np

from abdphen import (
    ForestConfig,
    concat_fold_shap,
    cross_validate,
    fit_forest,
    forest_shap,
    generate_cohort,
    manifest_from_dict,
    predict_proba,
    rank_features,
    stratified_kfold,
)

manifest = manifest_from_dict(
    {
        "n": 800,
        "seed": 42,
        "effects": [
            {"feature": "visceral_fat_volume_mm3", "direction": "risk", "strength": 1.2},
            {"feature": "liver_intensity_median", "direction": "risk", "strength": 0.8},
            {"feature": "skeletal_muscle_volume_mm3", "direction": "protective", "strength": 1.0},
        ],
    }
)
cohort, _ = generate_cohort(manifest)

# Cross-validation folds are stratified on (label, sex, age decade,
# contrast) so every fold sees the same case mix.
folds = stratified_kfold(cohort, k=5, seed=1)
config = ForestConfig(n_trees=150, seed=1)
cv = cross_validate(cohort, config, folds)
print(f"cross-validated AUC: {cv.mean_auc:.3f} ± {cv.sd_auc:.3f}")
print(f"per fold: {[round(float(a), 3) for a in cv.fold_auc]}")

# Explain out-of-fold: each record is attributed by the fold model that
# never trained on it, removing the optimism of resubstitution.
shap = concat_fold_shap(cv, cohort)
print(f"\nSHAP matrix: {shap.values.shape[0]} records x {shap.values.shape[1]} inputs")

# Local accuracy — the additivity identity, checked on the fitted model.
model = fit_forest(cohort.inputs(), cohort.label, config)
full = forest_shap(model, cohort.inputs())
residual = np.abs(full.base + full.values.sum(axis=1) - predict_proba(model, cohort.inputs()))
print(f"max |base + sum(phi) - p|: {residual.max():.2e}")

# Rank inputs by mean |SHAP|; direction comes from the sign of the
# correlation between a feature's value and its attribution.
ranking = rank_features(shap, k=10, inputs=cohort.inputs())
print("\ntop 10 by mean |SHAP|:")
for entry in ranking:
    print(f"  {entry.name:45s} {entry.importance:.5f}  {entry.direction}")

# The three planted features should sit at the top with the planted
# directions; everything below them is noise the forest mostly ignores.
