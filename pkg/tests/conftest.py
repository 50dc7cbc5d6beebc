#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
This file contains all needed elements for the test modules below this folder
"""
from quasitile.version import *  # for __version__, __author__

from pathlib import Path

import pytest

from src.quasitile import Quasitile, AmmannPattern, Window
from src.quasitile.utils.parser import parse_window


@pytest.fixture
def quasitile(tmp_path: Path) -> Quasitile:
    return Quasitile(tmp_path, seed=7, loglevel=None)


@pytest.fixture(scope="session")
def small_window() -> Window:
    return parse_window("4")


@pytest.fixture(scope="session")
def penrose() -> AmmannPattern:
    return Quasitile(loglevel=None).pattern("10", "1", q0="rationals")


@pytest.fixture(scope="session")
def octagonal_a() -> AmmannPattern:
    return Quasitile(loglevel=None).pattern("8", "2a", q0="rationals")


@pytest.fixture(scope="session")
def octagonal_b() -> AmmannPattern:
    return Quasitile(loglevel=None).pattern("8", "2b", q0="rationals")
