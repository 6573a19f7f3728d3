# Copyright (c) 2026 bfdkit contributors
# SPDX-License-Identifier: Apache-2.0
"""Body-pose based face detection and detection-evaluation toolkit."""

from ._bfdkit import *  # noqa: F401,F403
from ._bfdkit import __doc__  # noqa: F401

__version__ = "0.1.0"
