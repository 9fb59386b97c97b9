"""CWIN1 binary dump of a solve result.

Layout, all little-endian:

    b"CWIN1"
    u64 n, u64 k, u64 rule id (0 classic, 1 zombie), u64 state_count
    copswin: ceil(state_count / 8) bytes, bit i of the vector is bit (i % 8)
             of byte i // 8 (least significant bit first), in state index order
    capture_time: state_count x u32, 0xFFFFFFFF for robber-winning states
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import BinaryIO

import numpy as np

from .solver import SolveResult

MAGIC = b"CWIN1"
_HEADER = struct.Struct("<QQQQ")


class DumpFormatError(ValueError):
    pass


@dataclass
class Dump:
    n: int
    k: int
    rule: int
    state_count: int
    copswin: np.ndarray
    capture_time: np.ndarray


def dumps(result: SolveResult) -> bytes:
    ts = result.system
    flags = np.frombuffer(bytes(result.copswin), dtype=np.uint8)
    times = np.asarray(result.capture_time, dtype="<u4")
    return b"".join(
        (
            MAGIC,
            _HEADER.pack(ts.n, ts.k, int(ts.rule.variant), ts.state_count),
            np.packbits(flags, bitorder="little").tobytes(),
            times.tobytes(),
        )
    )


def write_dump(result: SolveResult, fh: BinaryIO) -> None:
    fh.write(dumps(result))


def loads(data: bytes) -> Dump:
    if data[: len(MAGIC)] != MAGIC:
        raise DumpFormatError("not a CWIN1 dump")
    off = len(MAGIC)
    if len(data) < off + _HEADER.size:
        raise DumpFormatError("truncated header")
    n, k, rule, count = _HEADER.unpack_from(data, off)
    off += _HEADER.size
    nbytes = (count + 7) // 8
    if len(data) != off + nbytes + 4 * count:
        raise DumpFormatError("payload size does not match state_count")
    bits = np.frombuffer(data, dtype=np.uint8, count=nbytes, offset=off)
    flags = np.unpackbits(bits, count=count, bitorder="little").astype(bool)
    times = np.frombuffer(data, dtype="<u4", count=count, offset=off + nbytes)
    return Dump(n, k, rule, count, flags, times)
