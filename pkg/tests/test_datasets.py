"""Dataset registry, caching, and checksum behavior (offline via file:// URLs)."""

import hashlib
import io
import tarfile
from pathlib import Path

import pytest

import bipeel.datasets as datasets
from bipeel import (
    ChecksumMismatchError,
    DatasetError,
    DownloadError,
    fetch_dataset,
    load_bipartite,
)
from bipeel.datasets import REGISTRY, DatasetSpec


def konect_archive(tmp_path: Path, lines: str) -> Path:
    """Build a konect-style tar.bz2 with an out.* member."""
    payload = lines.encode()
    buffer = io.BytesIO()
    with tarfile.open(fileobj=buffer, mode="w:bz2") as archive:
        info = tarfile.TarInfo("sample/out.sample")
        info.size = len(payload)
        archive.addfile(info, io.BytesIO(payload))
    path = tmp_path / "sample.tar.bz2"
    path.write_bytes(buffer.getvalue())
    return path


@pytest.fixture
def fake_registry(tmp_path, monkeypatch):
    archive = konect_archive(
        tmp_path, "% bip unweighted\n1 1 1 123\n1 2 1 124\n2 1 1 125\n2 2\n"
    )
    spec = DatasetSpec(
        "sample", archive.resolve().as_uri(), "konect", description="test data"
    )
    monkeypatch.setitem(REGISTRY, "sample", spec)
    return archive


def test_unknown_name_lists_registry():
    with pytest.raises(DatasetError) as err:
        fetch_dataset("nope")
    message = str(err.value)
    for name in REGISTRY:
        assert name in message


def test_fetch_normalizes_and_caches(fake_registry, tmp_path):
    cache = tmp_path / "cache"
    path = fetch_dataset("sample", cache_dir=cache)
    graph = load_bipartite(path)
    assert (graph.u_count, graph.v_count, graph.edge_count) == (2, 2, 4)
    # cache hit: delete the source archive, fetch again without network
    fake_registry.unlink()
    assert fetch_dataset("sample", cache_dir=cache) == path


def test_checksum_mismatch_keeps_no_file(fake_registry, tmp_path, monkeypatch):
    spec = REGISTRY["sample"]
    pinned = DatasetSpec(spec.name, spec.url, spec.fmt, sha256="0" * 64)
    monkeypatch.setitem(REGISTRY, "sample", pinned)
    cache = tmp_path / "cache2"
    with pytest.raises(ChecksumMismatchError):
        fetch_dataset("sample", cache_dir=cache)
    assert not (cache / "sample.edges").exists()


def test_checksum_match_accepts(fake_registry, tmp_path, monkeypatch):
    digest = hashlib.sha256(fake_registry.read_bytes()).hexdigest()
    spec = REGISTRY["sample"]
    pinned = DatasetSpec(spec.name, spec.url, spec.fmt, sha256=digest)
    monkeypatch.setitem(REGISTRY, "sample", pinned)
    cache = tmp_path / "cache3"
    assert fetch_dataset("sample", cache_dir=cache).exists()


def test_download_failure_raises(tmp_path, monkeypatch):
    spec = DatasetSpec(
        "ghost", (tmp_path / "definitely-missing.tar.bz2").as_uri(), "konect"
    )
    monkeypatch.setitem(REGISTRY, "ghost", spec)
    with pytest.raises(DownloadError):
        fetch_dataset("ghost", cache_dir=tmp_path / "cache4")


def test_csv_normalizer(tmp_path, monkeypatch):
    csv = tmp_path / "pairs.csv"
    csv.write_text("hero,comic\nA,C1\nA,C2\nB,C1\n")
    spec = DatasetSpec("heroes", csv.resolve().as_uri(), "csv")
    monkeypatch.setitem(REGISTRY, "heroes", spec)
    path = fetch_dataset("heroes", cache_dir=tmp_path / "cache5")
    graph = load_bipartite(path)
    assert (graph.u_count, graph.v_count, graph.edge_count) == (2, 2, 3)


def test_registry_carries_table_targets():
    assert {"condmat", "github", "marvel", "imdb", "lastfm"} <= set(REGISTRY)
