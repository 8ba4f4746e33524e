#!/usr/bin/env python3
"""
Tests for transmit filter design and artificial noise
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

import numpy as np
import pytest
from numpy.testing import assert_allclose

from channel.channel_model import draw_channel, ofdm_operators, subcarrier_blocks, to_antenna_major
from core.config import OfdmConfig
from core.errors import ConfigurationError, InfeasibleMseCapError
from core.linalg import svd
from ofdm.frontend import random_frame, transmit
from precoding.artificial_noise import an_basis, generate_an
from precoding.filters import design_minpower_filter, design_mse_filter, svd_baseline_filter
from precoding.power_allocation import allocation_mse


@pytest.fixture
def cfg():
    return OfdmConfig(n_subcarriers=8, cp_len=4, n_tx=4, n_rx_bob=2, n_rx_eve=2,
                      n_streams=2, n_taps=2, total_power=100.0)


@pytest.fixture
def n64_cfg():
    return OfdmConfig(n_subcarriers=64, cp_len=16, n_tx=4, n_rx_bob=2, n_rx_eve=2,
                      n_streams=2, n_taps=8, total_power=100.0)


def test_mse_filter_uses_full_budget(cfg):
    ch = draw_channel(cfg, seed=1)
    filt = design_mse_filter(ch.h_eff, cfg)
    assert filt.w_t.shape == (32, 16)
    assert filt.transmit_power == pytest.approx(cfg.total_power, rel=1e-9)
    assert filt.alloc.residual == pytest.approx(0.0, abs=1e-9)
    assert filt.q_a is None


def test_mse_filter_diagonalizes_bob(cfg):
    ch = draw_channel(cfg, seed=2)
    filt = design_mse_filter(ch.h_eff, cfg)
    cascade = ch.h_eff @ filt.w_t
    gram = cascade.conj().T @ cascade
    assert_allclose(gram, np.diag(filt.lambdas), atol=1e-8 * np.max(filt.lambdas))


def test_mse_filter_sigma_descending(cfg):
    filt = design_mse_filter(draw_channel(cfg, seed=3).h_eff, cfg)
    assert np.all(np.diff(filt.sigma) <= 0)
    assert filt.sigma.size == cfg.n_symbols


def test_filter_rejects_wrong_channel_shape(cfg):
    with pytest.raises(ConfigurationError):
        design_mse_filter(np.zeros((10, 10)), cfg)


def test_zero_power_gives_zero_filter(cfg):
    zero = cfg.with_overrides(total_power=0.0)
    filt = design_mse_filter(draw_channel(zero, seed=4).h_eff, zero)
    assert_allclose(filt.w_t, 0.0)


def test_svd_baseline_splits_power_equally(cfg):
    ch = draw_channel(cfg, seed=5)
    filt = svd_baseline_filter(ch.h_eff, cfg)
    assert_allclose(filt.alloc.p, cfg.total_power / cfg.n_symbols)
    assert filt.transmit_power == pytest.approx(cfg.total_power, rel=1e-9)
    assert np.isnan(filt.alloc.dual)

    # precoder only mixes antennas within a subcarrier
    cascade = ch.h_eff @ filt.w_t
    for n in range(cfg.n_subcarriers):
        rows = slice(2 * n, 2 * n + 2)
        off = np.delete(cascade[rows], np.s_[2 * n:2 * n + 2], axis=1)
        assert np.max(np.abs(off)) < 1e-9


def test_mse_filter_beats_baseline_on_mse(cfg):
    wins = 0
    for seed in range(20):
        ch = draw_channel(cfg, seed=seed)
        proposed = design_mse_filter(ch.h_eff, cfg)
        baseline = svd_baseline_filter(ch.h_eff, cfg)
        mse_p = allocation_mse(proposed.sigma, proposed.alloc.p, cfg.noise_var)
        mse_b = allocation_mse(baseline.sigma, baseline.alloc.p, cfg.noise_var)
        wins += mse_p <= mse_b + 1e-9
    assert wins == 20


def test_minpower_filter_meets_cap(cfg):
    ch = draw_channel(cfg, seed=6)
    filt = design_minpower_filter(ch.h_eff, cfg, mse_cap=3.0, h_block=ch.h_block)
    assert allocation_mse(filt.sigma, filt.alloc.p, cfg.noise_var) == pytest.approx(3.0, rel=1e-8)
    assert filt.alloc.consumed + filt.alloc.residual == pytest.approx(cfg.total_power)
    assert filt.q_a is not None


def test_minpower_filter_infeasible(cfg):
    weak = cfg.with_overrides(total_power=0.01)
    ch = draw_channel(weak, seed=7)
    with pytest.raises(InfeasibleMseCapError):
        design_minpower_filter(ch.h_eff, weak, mse_cap=0.1)


def test_an_basis_dimension_n64(n64_cfg):
    ch = draw_channel(n64_cfg, seed=8)
    q_a = an_basis(ch.h_block, n64_cfg)
    # N (N_A - N_s) + N_cp N_A
    assert q_a.shape == (320, 64 * 2 + 16 * 4)
    assert_allclose(q_a.conj().T @ q_a, np.eye(q_a.shape[1]), atol=1e-9)

    post_cp = ofdm_operators(64, 16, 2).cp_remove @ ch.h_block
    assert np.linalg.norm(post_cp @ q_a) < 1e-9 * np.linalg.norm(post_cp)


def test_generate_an_exact_power(cfg):
    ch = draw_channel(cfg, seed=9)
    q_a = an_basis(ch.h_block, cfg)
    z = generate_an(q_a, power=3.5, seed=1)
    assert np.sum(np.abs(z) ** 2) == pytest.approx(3.5, rel=1e-12)
    assert_allclose(z, generate_an(q_a, power=3.5, seed=1))


def test_generate_an_expected_power(cfg):
    ch = draw_channel(cfg, seed=9)
    q_a = an_basis(ch.h_block, cfg)
    energies = [np.sum(np.abs(generate_an(q_a, 2.0, seed=s, normalization='expected')) ** 2)
                for s in range(2000)]
    assert np.mean(energies) == pytest.approx(2.0, rel=0.03)
    assert np.std(energies) > 0


def test_generate_an_zero_power(cfg):
    q_a = an_basis(draw_channel(cfg, seed=9).h_block, cfg)
    assert_allclose(generate_an(q_a, 0.0, seed=0), 0.0)


def test_generate_an_rejects_unknown_normalization(cfg):
    q_a = an_basis(draw_channel(cfg, seed=9).h_block, cfg)
    with pytest.raises(ConfigurationError):
        generate_an(q_a, 1.0, seed=0, normalization='peak')


def test_an_vanishes_at_bob_but_not_at_eve(cfg):
    rng = np.random.default_rng(0)
    for seed in range(100):
        ch = draw_channel(cfg, seed=seed)
        filt = design_mse_filter(ch.h_eff, cfg)
        frame = random_frame(cfg, seed=seed)
        q_a = an_basis(ch.h_block, cfg)
        z_a = generate_an(q_a, rng.uniform(0.0, 0.9) * cfg.total_power, seed=seed)

        bob_an, eve_an = transmit(frame, filt.w_t, z_a, ch, cfg, seed=0, noise_var=0.0)
        bob, eve = transmit(frame, filt.w_t, None, ch, cfg, seed=0, noise_var=0.0)
        assert np.linalg.norm(bob_an.y - bob.y) <= 1e-8 * np.linalg.norm(bob.y)

        eve_post_cp = ofdm_operators(cfg.n_subcarriers, cfg.cp_len, cfg.n_rx_eve).cp_remove @ ch.g_block
        assert np.linalg.norm(eve_post_cp @ z_a) > 1e-6 * np.linalg.norm(z_a)
        assert not np.allclose(eve_an.y, eve.y)


def test_time_domain_transmit_power_matches_filter(cfg):
    ch = draw_channel(cfg, seed=10)
    filt = design_mse_filter(ch.h_eff, cfg)
    ops = ofdm_operators(cfg.n_subcarriers, cfg.cp_len, cfg.n_tx)
    # IFFT is unitary, so the pre-CP time signal carries Tr(W_t W_t^H) on average
    x = np.stack([ops.idft @ to_antenna_major(filt.w_t @ random_frame(cfg, s).symbols, 8, 4)
                  for s in range(400)])
    assert np.mean(np.sum(np.abs(x) ** 2, axis=1)) == pytest.approx(filt.transmit_power, rel=0.05)


def test_global_singular_values_are_union_of_subcarriers(cfg):
    for seed in range(20):
        ch = draw_channel(cfg, seed=seed)
        global_sigma = svd(ch.h_eff).sigma
        blocks = subcarrier_blocks(ch.h_eff, cfg.n_subcarriers, cfg.n_rx_bob, cfg.n_tx)
        local_sigma = np.sort(np.linalg.svd(blocks, compute_uv=False).ravel())[::-1]
        assert_allclose(global_sigma, local_sigma, atol=1e-8)


def test_an_basis_single_antenna_spans_cyclic_prefix():
    siso = OfdmConfig(n_subcarriers=8, cp_len=4, n_tx=1, n_rx_bob=1, n_rx_eve=1,
                      n_streams=1, n_taps=2)
    for seed in range(5):
        q_a = an_basis(draw_channel(siso, seed=seed).h_block, siso)
        assert q_a.shape == (12, 4)
        assert_allclose(q_a.conj().T @ q_a, np.eye(4), atol=1e-9)
