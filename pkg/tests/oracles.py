"""Independent oracles used by the test suite.

Deliberately implemented without touching the library's code paths:
matrix encoding by explicit Kronecker products, erasure recoverability by
GF(2) rank, capacity by trapezoid integration over the LLR density, and
channel reliabilities by genie-aided Monte Carlo.
"""

import numpy as np

_F = np.array([[1, 0], [1, 1]], dtype=np.uint8)

_trapezoid = getattr(np, "trapezoid", None) or np.trapz


def kron_generator(n_log2: int) -> np.ndarray:
    """F^{(x)n} as an explicit 0/1 matrix."""
    g = np.array([[1]], dtype=np.uint8)
    for _ in range(n_log2):
        g = np.kron(g, _F)
    return g % 2


def matrix_encode(u: np.ndarray) -> np.ndarray:
    """x = u F^{(x)n} over GF(2), by plain matrix multiplication."""
    u = np.asarray(u, dtype=np.uint8)
    n_log2 = u.shape[-1].bit_length() - 1
    return (u @ kron_generator(n_log2)) % 2


def gf2_rank(m: np.ndarray) -> int:
    m = np.array(m, dtype=np.uint8) % 2
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if m[r, c]:
                pivot = r
                break
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(rows):
            if r != rank and m[r, c]:
                m[r] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def erasure_uniquely_solvable(n_log2: int, info_set_1b, known_1b) -> bool:
    """Do the known coded bits (plus frozen bits) pin down u_A uniquely?

    Unknowns are the info bits; the coefficient of u_a in known position j is
    G[a, j].  Unique solution iff the K x |S| system has rank K.
    """
    g = kron_generator(n_log2)
    rows = np.asarray(sorted(info_set_1b)) - 1
    cols = np.asarray(sorted(known_1b), dtype=np.int64) - 1
    if cols.size < rows.size:
        return False
    return gf2_rank(g[np.ix_(rows, cols)]) == rows.size


def capacity_trapezoid(snr_linear: float) -> float:
    """1 - E[log2(1 + e^-L)] for L ~ N(4 snr, 8 snr), by fine trapezoid."""
    if snr_linear == 0.0:
        return 0.0
    mean = 4.0 * snr_linear
    var = 8.0 * snr_linear
    sd = np.sqrt(var)
    l = np.linspace(mean - 12.0 * sd, mean + 12.0 * sd, 400001)
    pdf = np.exp(-((l - mean) ** 2) / (2.0 * var)) / np.sqrt(2.0 * np.pi * var)
    loss = np.logaddexp(0.0, -l) / np.log(2.0)
    return float(1.0 - _trapezoid(pdf * loss, l))


def _genie_sc(llr: np.ndarray, leaf: np.ndarray, off: int) -> None:
    """SC recursion with all-zero feedback, recording leaf decision LLRs.

    For the all-zero codeword this gives each synthetic channel's decision
    LLR under genie-aided (correct-prior) successive cancellation.
    """
    n_local = llr.shape[1]
    if n_local == 1:
        leaf[:, off] = llr[:, 0]
        return
    h = n_local // 2
    a, b = llr[:, :h], llr[:, h:]
    _genie_sc(np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b)), leaf, off)
    _genie_sc(a + b, leaf, off + h)


def mc_channel_error_rates(n_log2: int, snr_db: float, trials: int, seed: int = 0) -> np.ndarray:
    """Monte Carlo error probability of each synthetic channel at Es/N0 snr_db.

    All-zero codeword over BI-AWGN; a channel errs when its genie-aided
    decision LLR is negative (ties counted as half an error).
    """
    n = 1 << n_log2
    rng = np.random.default_rng(seed)
    sigma = np.sqrt(1.0 / (2.0 * 10.0 ** (snr_db / 10.0)))
    errors = np.zeros(n)
    chunk = 4096
    done = 0
    while done < trials:
        b = min(chunk, trials - done)
        y = 1.0 + sigma * rng.standard_normal((b, n))
        llr = 2.0 * y / (sigma * sigma)
        leaf = np.empty((b, n))
        _genie_sc(llr, leaf, 0)
        errors += (leaf < 0).sum(axis=0) + 0.5 * (leaf == 0).sum(axis=0)
        done += b
    return errors / trials
