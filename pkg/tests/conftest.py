"""Общие фикстуры тестов cfklab"""

import random
from pathlib import Path

import pytest

from src.cfk import catalog_get, staircase, tensor
from src.logger import set_debug
from src.tools import get_computation_logger

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    """Без пользовательского .env: каждый тест со своими логами и без отладки"""
    for name in (
        "CFKLAB_CATALOG_DIR",
        "CFKLAB_TRUNCATION",
        "CFKLAB_STABILITY_ROUNDS",
        "CFKLAB_FORMAT",
        "CFKLAB_MAX_WORKERS",
        "CFKLAB_DEBUG",
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("CFKLAB_LOGS_DIR", str(tmp_path / "logs"))
    set_debug(False)
    get_computation_logger().clear()
    yield
    set_debug(False)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def unknot():
    return catalog_get("unknot")


@pytest.fixture
def trefoil():
    return catalog_get("trefoil_right")


@pytest.fixture
def trefoil_left():
    return catalog_get("trefoil_left")


@pytest.fixture
def figure8():
    return catalog_get("figure8")


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_staircase(rng: random.Random, max_half: int = 2):
    """Случайная палиндромная лестница с шагами 1..2"""
    half = [rng.randint(1, 2) for _ in range(rng.randint(0, max_half))]
    if len(half) % 2:
        middle = [rng.randint(1, 2)]
        steps = half + middle + middle + half[::-1]
    else:
        steps = half + half[::-1]
    return staircase(steps)


def random_small_complex(rng: random.Random):
    """Лестница или тензорное произведение двух маленьких лестниц"""
    if rng.random() < 0.7:
        return random_staircase(rng)
    return tensor(random_staircase(rng, 1), random_staircase(rng, 1))
