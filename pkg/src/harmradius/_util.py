"""Shared output formatting: all user-facing floats use 12 significant
digits, below the tolerance floors and above printed-table precision."""

__all__ = ["fmt12", "round12"]


def fmt12(x: float) -> str:
    return f"{float(x):.12g}"


def round12(x: float) -> float:
    """Round through the 12-digit representation, for deterministic JSON."""
    return float(fmt12(x))
