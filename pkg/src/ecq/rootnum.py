"""Local and global root numbers.

The local rules implemented here are the ones that admit clean closed forms:
the archimedean place, good and multiplicative reduction at every p, additive
reduction at p >= 5 (through the Kronecker-symbol table keyed on the Kodaira
type), and the I_n* types at p = 3.  Remaining additive cases at p = 2 and 3
are reported as undetermined (None) rather than guessed, and an undetermined
factor makes the global sign undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import WeierstrassCurve
from .localdata import (ADDITIVE, GOOD, NONSPLIT_MULT, SPLIT_MULT, bad_primes,
                        tate)
from .modmath import kronecker

__all__ = ["LocalRootNumber", "RootNumberReport", "local_root_number",
           "global_root_number", "root_number_report"]


@dataclass(frozen=True)
class LocalRootNumber:
    p: int                  # 0 stands for the archimedean place
    w: int | None           # +1, -1, or None when not determined here
    reason: str


@dataclass(frozen=True)
class RootNumberReport:
    local: tuple            # of LocalRootNumber, infinity first
    w: int | None

    @property
    def determined(self):
        return self.w is not None


def local_root_number(E: WeierstrassCurve, p: int) -> LocalRootNumber:
    """w_p(E); None when the case is outside the implemented table."""
    ld = tate(E, p)
    if ld.red_class == GOOD:
        return LocalRootNumber(p, 1, "good reduction")
    if ld.red_class == NONSPLIT_MULT:
        return LocalRootNumber(p, 1, "nonsplit multiplicative")
    if ld.red_class == SPLIT_MULT:
        return LocalRootNumber(p, -1, "split multiplicative")
    assert ld.red_class == ADDITIVE
    kod = ld.kodaira
    if p >= 5:
        if kod.tag in ("I0*", "In*"):
            # potentially multiplicative for n >= 1, quadratic twist sign for I0*
            return LocalRootNumber(p, kronecker(-1, p), f"{kod} at p >= 5")
        if kod.tag in ("II", "II*", "IV", "IV*"):
            return LocalRootNumber(p, kronecker(-3, p), f"{kod} at p >= 5")
        if kod.tag in ("III", "III*"):
            return LocalRootNumber(p, kronecker(-2, p), f"{kod} at p >= 5")
    if p == 3 and kod.tag in ("I0*", "In*"):
        return LocalRootNumber(p, -1, f"{kod} at p = 3")
    return LocalRootNumber(p, None, f"additive {kod} at p = {p}: no closed form")


def root_number_report(E: WeierstrassCurve) -> RootNumberReport:
    parts = [LocalRootNumber(0, -1, "archimedean place")]
    for p in bad_primes(E):
        parts.append(local_root_number(E, p))
    w = 1
    for part in parts:
        if part.w is None:
            w = None
            break
        w *= part.w
    return RootNumberReport(tuple(parts), w)


def global_root_number(E: WeierstrassCurve):
    """The sign of the functional equation, or None if a local factor falls
    outside the implemented table."""
    return root_number_report(E).w
