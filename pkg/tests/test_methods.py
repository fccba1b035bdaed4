import numpy as np
import pytest

from alignedlinkpred.networks import HeterogeneousNetwork, AlignedPair, UserPartition
from alignedlinkpred.methods import build_link_instances, LinkInstances, GROUPS
from alignedlinkpred.methods import MethodId, MethodConfig, evaluate_method, run_method


@pytest.fixture(scope="module")
def instances(small_aligned_pair, small_partition):
    return(build_link_instances(small_aligned_pair, small_partition, ratio=0.0, random_seed=0))


def test_new_instances_are_balanced_and_disjoint(small_aligned_pair, small_partition, instances):
    new_rows = instances.indices("new")
    labels = instances.labels[new_rows]
    assert labels.sum() == labels.size - labels.sum()

    pairs = [tuple(instances.pairs[i]) for i in new_rows]
    assert len(set(pairs)) == len(pairs)
    for (u, v), label in zip(pairs, labels):
        assert u in small_partition.new_users
        assert small_aligned_pair.target.has_link(u, v) == bool(label)


def test_brand_new_users_have_zero_target_block(small_partition, instances):
    for i in instances.indices("new"):
        u, v = instances.pairs[i]
        if v in small_partition.new_users:
            assert np.all(instances.features[i, :19] == 0.0)
        else:
            assert np.all(instances.features[i, :3] == 0.0)


def test_old_groups_hold_old_old_pairs(small_partition, instances):
    assert len(instances.indices("old")) > 0
    assert len(instances.indices("old-sampled")) > 0
    for group in ("old", "old-sampled"):
        rows = instances.indices(group)
        assert instances.labels[rows].sum() * 2 == rows.size
        for u, v in instances.pairs[rows]:
            assert u in small_partition.old_users and v in small_partition.old_users


def test_instance_access(instances):
    row = instances[0]
    assert row.group == "new"
    assert len(row.features) == 39
    assert instances.layout("source-19").shape == (len(instances), 19)
    assert "new=" in repr(instances)
    with pytest.raises(ValueError):
        instances.layout("merged-40")
    with pytest.raises(ValueError):
        LinkInstances([[1, 2]], np.zeros((1, 39)), [1], ["fresh"])


def test_common_neighbors_is_uninformative_without_information(instances):
    for fold, fold_auc, fold_accuracy in evaluate_method(MethodId.CN, instances, random_seed=0):
        assert fold_auc == 0.5
        assert fold_accuracy is None


def test_naive_matches_pseudo_label_agreement(instances):
    results = evaluate_method(MethodId.NAIVE, instances, random_seed=0)
    new_rows = instances.indices("new")
    agreement = np.mean(instances.features[new_rows, 38] == instances.labels[new_rows])
    accuracies = [fold_accuracy for _, fold_auc, fold_accuracy in results]
    assert all(fold_auc is None for _, fold_auc, _ in results)
    assert min(accuracies) <= agreement <= max(accuracies)


def test_supervised_methods_report_both_metrics(instances):
    results = evaluate_method(MethodId.SCAN_PS, instances, number_of_folds=3, random_seed=1,
                              number_of_epochs=50)
    assert [fold for fold, _, _ in results] == [0, 1, 2]
    for _, fold_auc, fold_accuracy in results:
        assert 0.0 <= fold_auc <= 1.0
        assert 0.0 <= fold_accuracy <= 1.0


def test_full_sample_equals_all_old_users(small_aligned_pair, small_partition):
    rows = dict()
    for method in (MethodId.SCAN_PS, MethodId.SCAN):
        config = MethodConfig(method, rho=1.0, ratio=0.3, seeds=(2,), number_of_epochs=100)
        rows[method] = run_method(small_aligned_pair, small_partition, config)
    for with_sampling, without_sampling in zip(rows[MethodId.SCAN_PS], rows[MethodId.SCAN]):
        assert with_sampling["auc"] == without_sampling["auc"]
        assert with_sampling["accuracy"] == without_sampling["accuracy"]


def test_empty_source_reduces_to_target_only(small_aligned_pair, small_partition):
    aligned = AlignedPair(small_aligned_pair.target, HeterogeneousNetwork([]), {})
    rows = dict()
    for method in (MethodId.SCAN, MethodId.TRAD):
        config = MethodConfig(method, ratio=0.5, seeds=(0,), number_of_epochs=100)
        rows[method] = run_method(aligned, small_partition, config)
    for merged, target_only in zip(rows[MethodId.SCAN], rows[MethodId.TRAD]):
        assert merged["auc"] == pytest.approx(target_only["auc"], abs=1e-9)


def test_run_method_rows_and_diagnostics(tmp_path, small_aligned_pair, small_partition):
    config = MethodConfig("trad-ps", ratio=0.2, seeds=(0, 1), number_of_folds=2, number_of_epochs=20)
    rows = run_method(small_aligned_pair, small_partition, config,
                      sampling_diagnostics_directory=str(tmp_path))
    assert len(rows) == 4
    assert [row["seed"] for row in rows] == [0, 0, 1, 1]
    assert set(rows[0]) == {"method", "ratio", "seed", "fold", "auc", "accuracy"}
    assert (tmp_path / "sampling_ratio0.20_seed1_vectors.csv").exists()


def test_instances_are_reproducible(small_aligned_pair, small_partition, instances):
    again = build_link_instances(small_aligned_pair, small_partition, ratio=0.0, random_seed=0)
    assert np.array_equal(again.pairs, instances.pairs)
    assert np.array_equal(again.features, instances.features)


def test_not_enough_non_links():
    complete = HeterogeneousNetwork(range(5), [(u, v) for u in range(5) for v in range(u + 1, 5)])
    aligned = AlignedPair(complete, HeterogeneousNetwork([]), {})
    with pytest.raises(ValueError, match="non-links"):
        build_link_instances(aligned, UserPartition([0], [1, 2, 3, 4]), include_old=False,
                             include_sampled_old=False)


def test_method_ids_and_config():
    assert MethodId.parse("scan-ps") is MethodId.SCAN_PS
    assert MethodId.CN.kind == "unsupervised"
    assert MethodId.NAIVE.kind == "naive"
    assert MethodId.SRC_ONLY.layout_id == "source-19"
    assert MethodId.OLD_ONLY_PS.uses_sampling
    assert not MethodId.TRAD.uses_sampling
    assert set(GROUPS) >= set(MethodId.SCAN.training_groups)
    with pytest.raises(ValueError):
        MethodId.parse("magic")
    for bad in (dict(ratio=1.5), dict(rho=0.0), dict(theta=-1.0), dict(number_of_folds=1), dict(seeds=())):
        with pytest.raises(ValueError):
            MethodConfig(MethodId.TRAD, **bad)
