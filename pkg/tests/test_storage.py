import struct

import numpy as np
import pytest

from multiscale import storage
from multiscale.encoding import EncodingParams, build_hierarchy
from multiscale.errors import FormatError, ParamsMismatchError, StorageError, UnsupportedVersionError
from multiscale.primality import sieve
from multiscale.primes import prime_chain
from multiscale.twins import twin_chain


@pytest.fixture
def small(tmp_path):
    hier = build_hierarchy(twin_chain(), EncodingParams(n_max=512 * 16))
    path = tmp_path / "twins.msp"
    storage.save(hier, path)
    return hier, path


def test_round_trip(small):
    hier, path = small
    loaded = storage.load(path)
    assert loaded == hier
    assert loaded.tag == "twins"
    assert not loaded[1].flags.writeable


def test_full_round_trip_is_byte_identical(full_primes, tmp_path):
    path = tmp_path / "primes.msp"
    storage.save(full_primes, path)
    loaded = storage.load(path, tag="primes")
    assert loaded == full_primes
    again = tmp_path / "again.msp"
    storage.save(loaded, again)
    assert path.read_bytes() == again.read_bytes()


def test_header_layout(small):
    hier, path = small
    data = path.read_bytes()
    magic, version, t, levels, n_max, tag_len = struct.unpack_from("<4sHBBQH", data)
    assert (magic, version, t, levels, n_max, tag_len) == (b"MSP1", 1, 3, 3, 8192, 5)
    assert len(data) == 18 + 5 + 24 + 1024 + 128 + 16


def test_wide_blocks_round_trip(tmp_path):
    hier = build_hierarchy(prime_chain(), EncodingParams(n_max=16 ** 3, t=4))
    storage.save(hier, tmp_path / "t4.msp")
    assert storage.load(tmp_path / "t4.msp", t=4) == hier


def test_bitmap_round_trip(tmp_path):
    bitmap = sieve(10_000)
    storage.save_bitmap(bitmap, tmp_path / "bitmap.msp")
    assert storage.load_bitmap(tmp_path / "bitmap.msp") == bitmap
    with pytest.raises(FormatError):
        storage.load(tmp_path / "bitmap.msp")


def test_bad_magic(small):
    _, path = small
    data = bytearray(path.read_bytes())
    data[:4] = b"XXXX"
    path.write_bytes(bytes(data))
    with pytest.raises(FormatError, match="magic"):
        storage.load(path)


def test_unsupported_version(small):
    _, path = small
    data = bytearray(path.read_bytes())
    data[4:6] = (2).to_bytes(2, "little")
    path.write_bytes(bytes(data))
    with pytest.raises(UnsupportedVersionError):
        storage.load(path)


def test_zero_length_file(tmp_path):
    path = tmp_path / "empty.msp"
    path.write_bytes(b"")
    with pytest.raises(FormatError):
        storage.load(path)


def test_truncated_section_names_level(small):
    _, path = small
    path.write_bytes(path.read_bytes()[:-10])
    with pytest.raises(FormatError, match="level 3"):
        storage.load(path)


def test_trailing_bytes(small):
    _, path = small
    path.write_bytes(path.read_bytes() + b"\0")
    with pytest.raises(FormatError, match="trailing"):
        storage.load(path)


def test_pinned_fields(small):
    _, path = small
    with pytest.raises(ParamsMismatchError):
        storage.load(path, t=4)
    with pytest.raises(ParamsMismatchError):
        storage.load(path, tag="primes")


def test_missing_file(tmp_path):
    with pytest.raises(StorageError):
        storage.load(tmp_path / "nope.msp")


def test_failed_write_leaves_no_temp_file(tmp_path):
    hier = build_hierarchy(prime_chain(), EncodingParams(n_max=512))
    with pytest.raises(StorageError):
        storage.save(hier, tmp_path / "missing-dir" / "h.msp")
    assert list(tmp_path.iterdir()) == []


def test_overwrite_is_atomic_replace(small):
    hier, path = small
    storage.save(hier, path)
    assert storage.load(path) == hier
    assert [p.name for p in path.parent.iterdir()] == ["twins.msp"]
