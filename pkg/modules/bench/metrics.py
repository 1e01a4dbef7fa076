from core.exceptions import BenchmarkError


def compute_speedup(t_a: float, t_b: float) -> float:
    """Speedup of A over baseline B: t_B / t_A."""
    if t_a <= 0 or t_b <= 0:
        raise BenchmarkError(f"runtimes must be positive (t_A={t_a}, t_B={t_b})")
    return t_b / t_a


def compute_efficiency(n: int, p: int, t: float) -> float:
    """Chart items processed per second per processor: n / (p * t)."""
    if n <= 0 or p <= 0 or t <= 0:
        raise BenchmarkError(f"efficiency inputs must be positive (n={n}, p={p}, t={t})")
    return n / (p * t)
