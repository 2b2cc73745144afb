"""Download and normalize the public bipartite datasets used for profiling.

Raw files land in a cache directory (``$BIPEEL_CACHE`` or
``~/.cache/bipeel``) and are normalized into the two-column edge-list
format the loader expects. Downloads go through a temporary file and are
digest-checked before the cache entry appears, so a failed or truncated
transfer never leaves a usable-looking file behind.
"""

from __future__ import annotations

import hashlib
import io
import json
import os
import tarfile
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .errors import ChecksumMismatchError, DatasetError, DownloadError

__all__ = ["DatasetSpec", "REGISTRY", "fetch_dataset", "dataset_cache_dir"]


@dataclass(frozen=True)
class DatasetSpec:
    """One registry entry.

    ``sha256`` pins the raw download when known; entries without a pin
    record the first observed digest in the cache metadata instead.
    ``fmt`` selects the normalizer: ``konect`` (tar.bz2 with an ``out.*``
    member, '%'-comments, extra columns) or ``csv`` (two comma-separated
    columns with a header row).
    """

    name: str
    url: str
    fmt: str
    sha256: str | None = None
    description: str = ""


REGISTRY: dict[str, DatasetSpec] = {
    spec.name: spec
    for spec in [
        DatasetSpec(
            "condmat",
            "http://konect.cc/files/download.tsv.opsahl-collaboration.tar.bz2",
            "konect",
            description="condensed-matter author-paper network (1995-1999)",
        ),
        DatasetSpec(
            "github",
            "http://konect.cc/files/download.tsv.github.tar.bz2",
            "konect",
            description="GitHub user-repository memberships",
        ),
        DatasetSpec(
            "marvel",
            "https://raw.githubusercontent.com/tomasonjo/neo4j-marvel/master/data/edges.csv",
            "csv",
            description="Marvel character-comic appearances",
        ),
        DatasetSpec(
            "imdb",
            "http://konect.cc/files/download.tsv.actor-movie.tar.bz2",
            "konect",
            description="IMDb actor-movie credits",
        ),
        DatasetSpec(
            "lastfm",
            "http://konect.cc/files/download.tsv.lastfm_band.tar.bz2",
            "konect",
            description="Last.fm user-band listening relations",
        ),
    ]
}


def dataset_cache_dir() -> Path:
    env = os.environ.get("BIPEEL_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "bipeel"


def fetch_dataset(
    name: str, cache_dir: str | Path | None = None, timeout: float = 120.0
) -> Path:
    """Return the path of the normalized edge list for a registered dataset.

    A cached copy short-circuits without touching the network. Unknown
    names raise :class:`DatasetError` listing the registry; download and
    checksum problems raise their dedicated errors and leave no partial
    cache entry behind.
    """
    if name not in REGISTRY:
        known = ", ".join(sorted(REGISTRY))
        raise DatasetError(f"unknown dataset {name!r}; known datasets: {known}")
    spec = REGISTRY[name]
    cache = Path(cache_dir) if cache_dir is not None else dataset_cache_dir()
    cache.mkdir(parents=True, exist_ok=True)
    edges_path = cache / f"{name}.edges"
    meta_path = cache / f"{name}.json"
    if edges_path.exists() and meta_path.exists():
        return edges_path

    raw = _download(spec.url, timeout)
    digest = hashlib.sha256(raw).hexdigest()
    if spec.sha256 is not None and digest != spec.sha256:
        raise ChecksumMismatchError(
            f"{name}: sha256 {digest} does not match pinned {spec.sha256}"
        )

    pairs = _normalize(spec, raw)
    if not pairs:
        raise DatasetError(f"{name}: no edges found after normalization")
    tmp = tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", dir=cache, suffix=".part", delete=False
    )
    try:
        with tmp:
            for a, b in pairs:
                tmp.write(f"{a}\t{b}\n")
        os.replace(tmp.name, edges_path)
    except BaseException:
        os.unlink(tmp.name)
        raise
    meta_path.write_text(
        json.dumps({"url": spec.url, "sha256": digest, "edges": len(pairs)}, indent=2)
    )
    return edges_path


def _download(url: str, timeout: float) -> bytes:
    try:
        with urllib.request.urlopen(url, timeout=timeout) as response:
            return response.read()
    except (urllib.error.URLError, OSError) as exc:
        raise DownloadError(f"download failed for {url}: {exc}") from exc


def _normalize(spec: DatasetSpec, raw: bytes) -> list[tuple[str, str]]:
    if spec.fmt == "konect":
        return _normalize_konect(raw)
    if spec.fmt == "csv":
        return _normalize_csv(raw)
    raise DatasetError(f"{spec.name}: unknown format {spec.fmt!r}")


def _normalize_konect(raw: bytes) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    with tarfile.open(fileobj=io.BytesIO(raw), mode="r:bz2") as archive:
        member = next(
            (m for m in archive.getmembers() if Path(m.name).name.startswith("out.")),
            None,
        )
        if member is None:
            raise DatasetError("konect archive has no out.* member")
        handle = archive.extractfile(member)
        if handle is None:
            raise DatasetError("konect archive member is not a regular file")
        for raw_line in handle:
            line = raw_line.decode("utf-8", "replace").strip()
            if not line or line.startswith("%") or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) < 2:
                continue
            pairs.append((tokens[0], tokens[1]))
    return pairs


def _normalize_csv(raw: bytes) -> list[tuple[str, str]]:
    pairs: list[tuple[str, str]] = []
    lines = raw.decode("utf-8", "replace").splitlines()
    for line in lines[1:]:  # header row dropped
        line = line.strip()
        if not line:
            continue
        tokens = line.split(",")
        if len(tokens) < 2:
            continue
        pairs.append((tokens[0].strip(), tokens[1].strip()))
    return pairs
