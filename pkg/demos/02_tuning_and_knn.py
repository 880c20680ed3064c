"""Leave-one-out parameter tuning for 1-NN classification.

A synthetic two-class problem where the class signal is a spike position.
A tight warping window separates the classes perfectly; the full window
warps the spikes onto each other and confuses the neighbors, so the tuner
must pick a narrow band.

Run: python demos/02_tuning_and_knn.py
"""

import numpy as np

import mvelastic as mv


def spike_dataset(n_per_class=6, L=30, seed=11):
    rng = np.random.default_rng(seed)
    series, labels = [], []
    for label, pos in (("early", 6), ("late", 20)):
        for _ in range(n_per_class):
            s = 0.05 * rng.normal(size=(L, 1))
            s[pos, 0] += 8.0 + rng.normal(scale=0.2)
            s[pos + 1, 0] += 1.0 + rng.normal(scale=0.2)
            series.append(s)
            labels.append(label)
    return mv.LabeledDataset.from_labeled_series(series, labels)


def main():
    train = spike_dataset()
    test = spike_dataset(n_per_class=4, seed=99)
    stats = mv.compute_stats(train)
    print(f"train: {train.n_instances} series, L={train.length}, "
          f"D={train.n_dims}, classes={train.label_names}\n")

    print("LOOCV accuracy across the DTW window grid (every 10th config):")
    grid = mv.grid_for("dtw", "independent", stats, train.length, train.n_dims)
    for cfg in grid[::10]:
        acc = mv.loocv_accuracy(train, cfg)
        print(f"  {cfg.params_string():8s} -> {acc:.3f}")
    print()

    model = mv.tune_measure(train, "dtw", "independent", stats)
    print(f"tuned: {model.summary()}")
    print(f"test accuracy: {mv.holdout_accuracy(model, train, test):.3f}\n")

    print("Tuning every measure (independent strategy):")
    for measure in mv.MEASURES:
        m = mv.tune_measure(train, measure, "independent", stats)
        acc = mv.holdout_accuracy(m, train, test)
        params = m.config.params_string() or "-"
        print(f"  {measure:6s} params={params:18s} "
              f"train={m.train_accuracy:.3f} test={acc:.3f}")


if __name__ == "__main__":
    main()
