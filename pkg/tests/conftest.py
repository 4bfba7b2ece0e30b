import numpy as np
import pytest

import symplectic_index as si
from symplectic_index import _backend


@pytest.fixture(params=_backend.available_backends())
def backend(request):
    old = _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(old)


def lam(n):
    return np.kron(np.eye(n, dtype=np.int64), np.array([[0, 1], [1, 0]], dtype=np.int64))


def dense(S):
    """Unpacked 0/1 array, rows x columns."""
    return np.array(S.to_rows(), dtype=np.int64)


def dense_vec(v):
    return np.array(v.to_list(), dtype=np.int64)


def oracle_inner(v, w):
    return int(dense_vec(v) @ lam(v.n) @ dense_vec(w)) % 2


def oracle_is_symplectic(S):
    a = dense(S)
    return bool(((a @ lam(S.n) @ a.T) % 2 == lam(S.n)).all())


def brute_force_members(n):
    """Column tuples of all 2n x 2n binary matrices with S Lambda S^T = Lambda."""
    size = 2 * n
    codes = np.arange(1 << (size * size), dtype=np.int64)
    shifts = np.arange(size * size, dtype=np.int64)
    mats = ((codes[:, None] >> shifts) & 1).reshape(-1, size, size).transpose(0, 2, 1)
    prods = np.einsum("kab,bc,kdc->kad", mats, lam(n), mats) % 2
    hits = codes[(prods == lam(n)).all(axis=(1, 2))]
    col_mask = (1 << size) - 1
    return {tuple((int(c) >> (size * b)) & col_mask for b in range(size)) for c in hits}


@pytest.fixture(scope="session")
def members():
    return {1: brute_force_members(1), 2: brute_force_members(2)}


def random_vec(rnd, n, nonzero=False):
    lo = 1 if nonzero else 0
    return si.BitVec(n, rnd.randrange(lo, 1 << (2 * n)))


def random_matrix(rnd, n):
    return si.SympMatrix(n, tuple(rnd.getrandbits(2 * n) for _ in range(2 * n)))


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[number] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, outcome = _ACCEPTANCE[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {title}")
