"""Binary container for hierarchies and primality bitmaps.

Layout, all integers little-endian::

    magic      4 bytes   b"MSP1"
    version    u16       1
    t          u8        block width exponent
    levels     u8        K
    n_max      u64
    tag_len    u16
    tag        tag_len bytes of UTF-8
    offsets    K x u64   absolute offset of each level section
    sections   level k holds n_max / 2**(t*k) patterns, each the smallest
               unsigned word holding 2**t bits

A primality bitmap is stored as a single section with tag ``"bitmap"``,
``t = 3`` and ``ceil(n_max / 8)`` bytes.  Files end exactly after the last
section.
"""
from __future__ import annotations

import os
import struct
import tempfile
from pathlib import Path

import numpy as np

from .encoding import EncodingParams, Hierarchy, LevelSequence
from .errors import (
    ConfigurationError,
    FormatError,
    ParamsMismatchError,
    StorageError,
    UnsupportedVersionError,
)
from .primality import PrimalityBitmap

MAGIC = b"MSP1"
VERSION = 1
BITMAP_TAG = "bitmap"
_FIXED = struct.Struct("<4sHBBQH")


def _section_sizes(t: int, levels: int, n_max: int, tag: str) -> list[int]:
    if tag == BITMAP_TAG:
        return [-(-n_max // 8)]
    params = EncodingParams(n_max=n_max, levels=levels, t=t)
    return [params.length(k) * params.dtype.itemsize for k in range(1, levels + 1)]


def _header(t: int, levels: int, n_max: int, tag: str, sizes: list[int]) -> bytes:
    raw_tag = tag.encode("utf-8")
    fixed = _FIXED.pack(MAGIC, VERSION, t, levels, n_max, len(raw_tag))
    start = len(fixed) + len(raw_tag) + 8 * levels
    offsets = []
    for size in sizes:
        offsets.append(start)
        start += size
    return fixed + raw_tag + struct.pack(f"<{levels}Q", *offsets)


def _write_atomic(path, chunks) -> None:
    path = Path(path)
    tmp = None
    try:
        fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp", dir=path.parent or ".")
        with os.fdopen(fd, "wb") as fh:
            for chunk in chunks:
                fh.write(chunk)
        os.replace(tmp, path)
    except OSError as exc:
        if tmp is not None and os.path.exists(tmp):
            os.unlink(tmp)
        raise StorageError(f"{path}: cannot write container: {exc}") from exc


def _le(values: np.ndarray) -> bytes:
    return values.astype(values.dtype.newbyteorder("<"), copy=False).tobytes()


def save(hier: Hierarchy, path) -> None:
    p = hier.params
    sizes = _section_sizes(p.t, p.levels, p.n_max, hier.tag)
    header = _header(p.t, p.levels, p.n_max, hier.tag, sizes)
    _write_atomic(path, [header] + [_le(seq.values) for seq in hier.levels])


def save_bitmap(bitmap: PrimalityBitmap, path) -> None:
    sizes = _section_sizes(3, 1, bitmap.n_max, BITMAP_TAG)
    _write_atomic(path, [_header(3, 1, bitmap.n_max, BITMAP_TAG, sizes), bitmap.bits.tobytes()])


def _read(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise StorageError(f"{path}: cannot read container: {exc}") from exc


def read_header(data: bytes, path="<bytes>") -> dict:
    if len(data) < _FIXED.size:
        raise FormatError(f"{path}: truncated header ({len(data)} bytes)")
    magic, version, t, levels, n_max, tag_len = _FIXED.unpack_from(data)
    if magic != MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise UnsupportedVersionError(f"{path}: unsupported container version {version}")
    pos = _FIXED.size
    if len(data) < pos + tag_len + 8 * levels:
        raise FormatError(f"{path}: truncated header (tag/offsets)")
    try:
        tag = data[pos : pos + tag_len].decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: property tag is not UTF-8") from exc
    pos += tag_len
    offsets = list(struct.unpack_from(f"<{levels}Q", data, pos))
    pos += 8 * levels
    try:
        sizes = _section_sizes(t, levels, n_max, tag)
    except ConfigurationError as exc:
        raise FormatError(f"{path}: inconsistent header: {exc}") from exc
    expected = pos
    for k, (off, size) in enumerate(zip(offsets, sizes), start=1):
        if off != expected:
            raise FormatError(f"{path}: level {k} offset {off}, expected {expected}")
        expected += size
    return {"t": t, "levels": levels, "n_max": n_max, "tag": tag,
            "offsets": offsets, "sizes": sizes, "end": expected}


def _sections(data: bytes, header: dict, path):
    for k, (off, size) in enumerate(zip(header["offsets"], header["sizes"]), start=1):
        if len(data) < off + size:
            raise FormatError(f"{path}: level {k} section truncated ({len(data) - off} of {size} bytes)")
    if len(data) != header["end"]:
        raise FormatError(f"{path}: {len(data) - header['end']} trailing bytes after last section")
    return [data[off : off + size] for off, size in zip(header["offsets"], header["sizes"])]


def _pin(header: dict, path, **pinned):
    for name, want in pinned.items():
        if want is not None and header[name] != want:
            raise ParamsMismatchError(f"{path}: stored {name}={header[name]}, expected {want}")


def load(path, t: int | None = None, levels: int | None = None, n_max: int | None = None,
         tag: str | None = None) -> Hierarchy:
    """Read a hierarchy; any given keyword pins that header field."""
    data = _read(path)
    header = read_header(data, path)
    if header["tag"] == BITMAP_TAG:
        raise FormatError(f"{path}: container holds a primality bitmap, not a hierarchy")
    _pin(header, path, t=t, levels=levels, n_max=n_max, tag=tag)
    params = EncodingParams(n_max=header["n_max"], levels=header["levels"], t=header["t"])
    dtype = params.dtype.newbyteorder("<")
    seqs = []
    for k, raw in enumerate(_sections(data, header, path), start=1):
        values = np.frombuffer(raw, dtype=dtype).astype(params.dtype)
        values.setflags(write=False)
        seqs.append(LevelSequence(k, values))
    return Hierarchy(params, header["tag"], tuple(seqs))


def load_bitmap(path) -> PrimalityBitmap:
    data = _read(path)
    header = read_header(data, path)
    if header["tag"] != BITMAP_TAG:
        raise FormatError(f"{path}: container holds {header['tag']!r}, not a primality bitmap")
    (raw,) = _sections(data, header, path)
    bits = np.frombuffer(raw, dtype=np.uint8).copy()
    bits.setflags(write=False)
    return PrimalityBitmap(header["n_max"], bits)
