"""Frame relevance aggregation against brute-force oracles."""

import random

import numpy as np
import pytest

from pitchside.errors import AllZeroNorms, DimensionMismatch
from pitchside.grounding import (
    AttentionBundle,
    aggregate,
    attention_bundle_from_doc,
    dump_attention,
    load_attention,
    mean_attention,
    query_importance,
    top_frames_to_seconds,
    top_k_frames,
)


def random_bundle(rng: random.Random, row_stochastic=False, max_dims=(4, 4, 8, 32)):
    np_rng = np.random.default_rng(rng.randrange(2**32))
    dims = tuple(rng.randint(1, cap) for cap in max_dims)
    attention = np_rng.random(dims)
    if row_stochastic:
        attention = attention / attention.sum(axis=-1, keepdims=True)
    norms = np_rng.random(dims[2]) + 0.01
    return AttentionBundle(attention=attention, query_norms=norms)


def oracle_weights(bundle: AttentionBundle) -> list[float]:
    """Naive quadruple loop over (layer, head, query, frame)."""
    layers, heads, queries, frames = bundle.attention.shape
    mean = [[0.0] * frames for _ in range(queries)]
    for l in range(layers):
        for h in range(heads):
            for q in range(queries):
                for n in range(frames):
                    mean[q][n] += float(bundle.attention[l, h, q, n])
    for q in range(queries):
        for n in range(frames):
            mean[q][n] /= layers * heads
    total = sum(float(v) for v in bundle.query_norms)
    alpha = [float(v) / total for v in bundle.query_norms]
    return [sum(alpha[q] * mean[q][n] for q in range(queries)) for n in range(frames)]


class TestMeanAttention:
    def test_single_slice_identity(self):
        attention = np.arange(12.0).reshape(1, 1, 3, 4)
        bundle = AttentionBundle(attention=attention, query_norms=np.ones(3))
        assert np.array_equal(mean_attention(bundle), attention[0, 0])

    def test_arithmetic_mean_of_two_layers(self):
        base = np.arange(8.0).reshape(2, 4) + 1
        attention = np.stack([base, 3 * base]).reshape(2, 1, 2, 4)
        bundle = AttentionBundle(attention=attention, query_norms=np.ones(2))
        assert np.allclose(mean_attention(bundle), 2 * base)

    def test_matches_triple_loop(self):
        bundle = random_bundle(random.Random(1))
        expected = np.array(
            [[sum(float(bundle.attention[l, h, q, n])
                  for l in range(bundle.layers) for h in range(bundle.heads))
              / (bundle.layers * bundle.heads)
              for n in range(bundle.frames)] for q in range(bundle.queries)]
        )
        assert np.max(np.abs(mean_attention(bundle) - expected)) <= 1e-9


class TestQueryImportance:
    def test_equal_norms(self):
        bundle = AttentionBundle(attention=np.ones((1, 1, 4, 2)),
                                 query_norms=np.full(4, 3.5))
        assert np.allclose(query_importance(bundle), [0.25] * 4)

    def test_proportional(self):
        bundle = AttentionBundle(attention=np.ones((1, 1, 2, 2)),
                                 query_norms=np.array([3.0, 1.0]))
        assert np.allclose(query_importance(bundle), [0.75, 0.25])

    def test_scale_invariant(self):
        rng = random.Random(2)
        bundle = random_bundle(rng)
        scaled = AttentionBundle(attention=bundle.attention,
                                 query_norms=bundle.query_norms * 17.0)
        assert np.allclose(query_importance(bundle), query_importance(scaled))

    def test_all_zero_norms_rejected(self):
        bundle = AttentionBundle(attention=np.ones((1, 1, 2, 2)),
                                 query_norms=np.zeros(2))
        with pytest.raises(AllZeroNorms):
            query_importance(bundle)


class TestAggregate:
    def test_single_query_equals_mean_row(self):
        attention = np.random.default_rng(0).random((2, 3, 1, 6))
        bundle = AttentionBundle(attention=attention, query_norms=np.array([2.0]))
        rel = aggregate(bundle)
        assert np.allclose(rel.weights, mean_attention(bundle)[0])

    def test_two_query_mixture(self):
        attention = np.array([[[[1.0, 0.0], [0.0, 1.0]]]])
        bundle = AttentionBundle(attention=attention, query_norms=np.ones(2))
        assert np.allclose(aggregate(bundle).weights, [0.5, 0.5])

    def test_oracle_equivalence(self):
        rng = random.Random(3)
        for _ in range(25):
            bundle = random_bundle(rng)
            got = aggregate(bundle).weights
            assert np.max(np.abs(got - np.array(oracle_weights(bundle)))) <= 1e-9

    def test_row_stochastic_normalization(self):
        rng = random.Random(4)
        for _ in range(25):
            bundle = random_bundle(rng, row_stochastic=True)
            assert abs(aggregate(bundle).weights.sum() - 1.0) <= 1e-9

    def test_convexity_bounds(self):
        bundle = random_bundle(random.Random(5))
        weights = aggregate(bundle).weights
        mean = mean_attention(bundle)
        assert np.all(weights <= mean.max(axis=0) + 1e-12)
        assert np.all(weights >= mean.min(axis=0) - 1e-12)

    def test_permutation_equivariance(self):
        rng = random.Random(6)
        bundle = random_bundle(rng)
        perm = np.random.default_rng(9).permutation(bundle.frames)
        permuted = AttentionBundle(attention=bundle.attention[..., perm],
                                   query_norms=bundle.query_norms)
        assert np.allclose(aggregate(permuted).weights,
                           aggregate(bundle).weights[perm])


class TestTopFrames:
    def test_ties_break_toward_earlier_frame(self):
        weights = np.array([0.2, 0.5, 0.5, 0.1, 0.5])
        assert top_k_frames(weights, 3) == (1, 2, 4)

    def test_norm_scaling_leaves_top_k_unchanged(self):
        bundle = random_bundle(random.Random(8))
        scaled = AttentionBundle(attention=bundle.attention,
                                 query_norms=bundle.query_norms * 5.0)
        assert aggregate(bundle).top_frames == aggregate(scaled).top_frames

    def test_seconds_conversion(self):
        rel = aggregate(AttentionBundle(
            attention=np.array([[[[0.1, 0.9, 0.3]]]]), query_norms=np.ones(1)),
            top_k=3)
        assert rel.top_frames == (1, 2, 0)
        assert top_frames_to_seconds(rel, fps=1) == [1, 2, 0]

    def test_fps_divides(self):
        rel = aggregate(AttentionBundle(
            attention=np.zeros((1, 1, 1, 51)) + np.eye(1, 51, k=50),
            query_norms=np.ones(1)), top_k=1)
        assert rel.top_frames == (50,)
        assert top_frames_to_seconds(rel, fps=25) == [2.0]

    def test_empty_top(self):
        rel = aggregate(AttentionBundle(attention=np.ones((1, 1, 1, 3)),
                                        query_norms=np.ones(1)), top_k=0)
        assert top_frames_to_seconds(rel, fps=1) == []


class TestBundleValidation:
    def test_flat_length_checked(self):
        with pytest.raises(DimensionMismatch):
            AttentionBundle.from_flat(2, 2, 2, 2, list(range(15)), [1.0, 1.0])

    def test_negative_attention_rejected(self):
        with pytest.raises(DimensionMismatch):
            AttentionBundle(attention=-np.ones((1, 1, 1, 2)), query_norms=np.ones(1))

    def test_norm_length_checked(self):
        with pytest.raises(DimensionMismatch):
            AttentionBundle(attention=np.ones((1, 1, 3, 2)), query_norms=np.ones(2))

    def test_file_round_trip(self, tmp_path):
        bundle = random_bundle(random.Random(10))
        path = tmp_path / "attention.json"
        dump_attention(bundle, path)
        loaded = load_attention(path)
        assert np.allclose(loaded.attention, bundle.attention)
        assert np.allclose(loaded.query_norms, bundle.query_norms)

    def test_doc_missing_field(self):
        with pytest.raises(DimensionMismatch):
            attention_bundle_from_doc({"layers": 1})
