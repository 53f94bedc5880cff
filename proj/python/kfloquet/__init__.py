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

"""Floquet spectra and dynamic localization of ac-driven Krawtchouk chains."""

from ._kfloquet import (
    __version__,
    bessel_j0,
    chain_propagator,
    classify_ratio,
    count_distinct_levels,
    direct_propagator,
    fidelity_trace,
    find_gamma_for_ratio,
    find_localization_gamma,
    kappa,
    mu,
    scan_spectrum,
    spectrum_at,
    static_energies,
    two_level_propagator,
)

__all__ = [
    "__version__",
    "bessel_j0",
    "chain_propagator",
    "classify_ratio",
    "count_distinct_levels",
    "direct_propagator",
    "fidelity_trace",
    "find_gamma_for_ratio",
    "find_localization_gamma",
    "kappa",
    "mu",
    "scan_spectrum",
    "spectrum_at",
    "static_energies",
    "two_level_propagator",
]
