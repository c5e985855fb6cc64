"""Value-sorted cell orders and the charge / cocharge reading words of a filling."""

from __future__ import annotations

from .words import Word
from .filling import Filling
from .shape import Cell, cells

ORDERS = ("standard", "primed")


def cell_key(u: Cell, order: str = "standard") -> tuple[int, int]:
    """Sort key realising one of the two total orders on cells.

    standard: earlier row first, and within a row the larger column first.
    primed: earlier row first, and within a row the smaller column first.
    """
    if order == "standard":
        return (u.row, -u.col)
    if order == "primed":
        return (u.row, u.col)
    raise ValueError(f"unknown cell order {order!r}")


def precedes(a: tuple[int, int, int], b: tuple[int, int, int], order: str = "standard") -> bool:
    """Comparator on (value, row, col): larger value first, ties broken by the cell order."""
    if a[0] != b[0]:
        return a[0] > b[0]
    return cell_key(Cell(a[1], a[2]), order) < cell_key(Cell(b[1], b[2]), order)


def sort_cells(sigma: Filling, order: str = "standard") -> list[Cell]:
    return sorted(cells(sigma.shape), key=lambda u: (-sigma[u], cell_key(u, order)))


def cocharge_word(sigma: Filling, order: str = "standard") -> Word:
    return tuple(u.row for u in sort_cells(sigma, order))


def charge_word(sigma: Filling, order: str = "standard") -> Word:
    return cocharge_word(sigma, order)[::-1]
