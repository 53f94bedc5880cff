# Copyright 2026 The kfloquet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import kfloquet


def test_version():
    assert kfloquet.__version__ == "1.0.0"


def test_kappa():
    assert kfloquet.kappa(4, 1.0, 0) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        kfloquet.kappa(4, 1.0, 4)


def test_undriven_rotation():
    s = kfloquet.two_level_propagator(1.0, math.pi, waveform="zero")
    assert s.shape == (2, 2)
    assert np.max(np.abs(s + np.eye(2))) < 1e-10


def test_mu_and_bessel():
    assert kfloquet.mu(1.0, 3.0, 0.84) == pytest.approx(0.7500957022688762, abs=1e-9)
    assert kfloquet.bessel_j0(1.0) == pytest.approx(0.765197686557967, abs=1e-14)


def test_lift_matches_direct():
    lifted = kfloquet.chain_propagator(6, 1.0, 1.3, amplitude=0.9)
    direct = kfloquet.direct_propagator(6, 1.0, 1.3, amplitude=0.9)
    assert lifted.shape == (7, 7)
    assert np.max(np.abs(lifted - direct)) < 1e-9
    assert np.max(np.abs(lifted.conj().T @ lifted - np.eye(7))) < 1e-10


def test_static_energies():
    e = kfloquet.static_energies(4, 1.0)
    assert np.allclose(e, [-4, -2, 0, 2, 4], atol=1e-10)


def test_scan_shape_and_resonance():
    gammas, levels = kfloquet.scan_spectrum(4, 1.0, 3.0, 0.0, 2.0, 5)
    assert gammas.shape == (5,)
    assert levels.shape == (5, 5)
    hit = kfloquet.find_gamma_for_ratio(1, 2)
    assert abs(hit["gamma_star"] - 0.84) < 0.01
    eps = kfloquet.spectrum_at(10, 1.0, 3.0, hit["gamma_star"])
    assert kfloquet.count_distinct_levels(eps, 3.0) == 2
    with pytest.raises(kfloquet._kfloquet.BracketError):
        kfloquet.find_gamma_for_ratio(1, 4, bracket=(0.0, 0.3))


def test_localization_and_trace():
    g0 = kfloquet.find_localization_gamma()["gamma_star"]
    assert g0 == pytest.approx(2.2714358685, abs=1e-8)
    psi0 = np.zeros(11, dtype=complex)
    psi0[0] = 1.0
    trace = kfloquet.fidelity_trace(10, 1.0, 3.0, g0, psi0, periods=3)
    assert min(trace["reconstruction"]) > 1 - 1e-6
    assert kfloquet.classify_ratio(0.75, 3.0)[:3] == (True, 1, 2)
