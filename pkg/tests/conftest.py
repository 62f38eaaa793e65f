"""Shared oracles.  None of these touch the code paths under test."""

import math

import pytest


def agm_K_E(k):
    """Classical K(k), E(k) by the arithmetic-geometric mean.

    a0 = 1, b0 = sqrt(1 - k^2), c0 = k; K = pi / (2 a_inf) and
    E = K (1 - sum_n 2^(n-1) c_n^2).
    """
    a, b, c = 1.0, math.sqrt(1.0 - k * k), k
    total = 0.5 * c * c
    power = 0.5
    for _ in range(60):
        if abs(a - b) <= 1e-17 * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        power *= 2.0
        total += power * c * c
    K = math.pi / (2.0 * a)
    return K, K * (1.0 - total)


@pytest.fixture
def agm():
    return agm_K_E


# acceptance verdicts, printed once at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
