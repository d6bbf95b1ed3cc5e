# SPDX-License-Identifier: Apache-2.0
#
# nf-isac: near-field ISAC channel models and rate analysis
# Copyright (C) 2026 The nf-isac Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import math

import numpy as np
import pytest

import nfisac

PI = math.pi


def default_geometry(n=15):
    lam = 0.125
    return nfisac.ArrayGeometry(n, n, lam / 2, lam * lam / (4 * PI), lam)


@pytest.fixture
def pair():
    g = default_geometry()
    hc = nfisac.build_channel(g, nfisac.Placement(10.0, PI / 4, PI / 6), nfisac.ChannelModel.Accurate)
    hs = nfisac.build_channel(g, nfisac.Placement(5.0, PI / 4, -PI / 6), nfisac.ChannelModel.Accurate)
    return hc, hs


def test_direction_and_distance():
    p = nfisac.Placement(10.0, PI / 4, PI / 6)
    assert np.allclose(p.direction(), (0.612372, 0.353553, 0.707107), atol=1e-6)
    assert nfisac.element_distance(default_geometry(), p, 0, 0) == pytest.approx(10.0, rel=1e-15)


def test_gains_layout(pair):
    hc, _ = pair
    assert hc.gains.shape == (15, 15)
    assert len(hc) == 225
    assert float(np.sum(np.abs(hc.gains) ** 2)) == pytest.approx(hc.norm_sq(), rel=1e-13)


def test_closed_form_matches_sum(pair):
    hc, _ = pair
    g = default_geometry()
    closed = nfisac.closed_form_norm_sq(g, nfisac.Placement(10.0, PI / 4, PI / 6), nfisac.ChannelModel.Accurate)
    assert hc.norm_sq() == pytest.approx(closed, rel=1e-4)
    assert nfisac.delta(1.0, 1.0, 1.0) == pytest.approx(0.4452909, abs=5e-8)


def test_rates(pair):
    hc, hs = pair
    sp = nfisac.SystemParams()
    sr_cc, cr_cc = nfisac.cc_rates(hc, hs, sp)
    sr_sc, cr_sc = nfisac.sc_rates(hc, hs, sp)
    assert sr_sc >= sr_cc
    assert cr_cc >= cr_sc
    assert nfisac.tau_rate_pair(hc, hs, sp, 1.0)[1] == pytest.approx(cr_cc, rel=1e-3)
    assert 0.0 <= nfisac.ccf(hc, hs) < 0.05
    assert nfisac.ul_cc_sr_lower(hc, hs, sp) <= nfisac.ul_cc_rates(hc, hs, sp)[0]


def test_pareto_and_region(pair):
    hc, hs = pair
    sp = nfisac.SystemParams()
    sol = nfisac.solve_rate_profile(hc, hs, sp, 0.1)
    assert sol.regime == nfisac.ParetoRegime.Interior
    assert sol.kkt_residual < 1e-6
    assert np.linalg.norm(sol.w) == pytest.approx(1.0, abs=1e-9)
    region = nfisac.downlink_isac_region(hc, hs, sp, 21)
    assert len(region) == 21


def test_slope():
    grid = nfisac.db_power_grid(100.0, 130.0, 31)
    assert nfisac.slope_estimate(lambda p: math.log2(1 + p), grid) == pytest.approx(1.0, abs=1e-6)


def test_errors(pair):
    hc, _ = pair
    with pytest.raises(ValueError):
        nfisac.ArrayGeometry(4, 5, 0.0625, 1e-3, 0.125)
    with pytest.raises(nfisac.DomainError):
        nfisac.solve_rate_profile(hc, hc, nfisac.SystemParams(), 0.5)
