"""
Deterministic memory accounting in bits of live big-number matrices.
"""
import threading
from contextlib import contextmanager
from contextvars import ContextVar
from typing import (Iterator,
                    Optional,
                    Tuple)


class BitLedger:
    __slots__ = '_current', '_peak', '_lock'

    def __init__(self) -> None:
        self._current = self._peak = 0
        self._lock = threading.Lock()

    @property
    def current(self) -> int:
        return self._current

    @property
    def peak(self) -> int:
        return self._peak

    def allocate(self, bits: int) -> None:
        with self._lock:
            self._current += bits
            if self._current > self._peak:
                self._peak = self._current

    def release(self, bits: int) -> None:
        with self._lock:
            self._current -= bits

    def __repr__(self) -> str:
        return '{}(current={}, peak={})'.format(type(self).__qualname__,
                                                self._current, self._peak)


_active_ledger = ContextVar('active_ledger',
                            default=None)  # type: ContextVar[Optional[BitLedger]]


@contextmanager
def instrumented() -> Iterator[BitLedger]:
    """Activates a fresh ledger for the enclosed computation."""
    ledger = BitLedger()
    token = _active_ledger.set(ledger)
    try:
        yield ledger
    finally:
        _active_ledger.reset(token)


def allocate(bits: int) -> None:
    ledger = _active_ledger.get()
    if ledger is not None:
        ledger.allocate(bits)


def release(bits: int) -> None:
    ledger = _active_ledger.get()
    if ledger is not None:
        ledger.release(bits)


def ledger_probe() -> Tuple[int, int]:
    """
    Returns current and peak bits of the active ledger,
    zeros when instrumentation is off.
    """
    ledger = _active_ledger.get()
    if ledger is None:
        return 0, 0
    return ledger.current, ledger.peak
