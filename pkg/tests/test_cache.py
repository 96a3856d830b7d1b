from orbisectors.admissible import partitions
from orbisectors.genus0 import cache, counting, trees


def test_round_trip_is_byte_identical(tmp_path):
    path = tmp_path / cache.CACHE_FILE
    cache.save(path, range(3, 7))
    first = path.read_bytes()
    cache.clear_memory()
    assert cache.load(path) == 2 * sum(len(list(partitions(n))) for n in range(3, 7))
    assert cache.dumps(cache.snapshot()).encode() == first
    cache.clear_memory()
    cache.save(path, range(3, 7))
    assert path.read_bytes() == first


def test_loaded_entries_are_used(tmp_path):
    path = tmp_path / cache.CACHE_FILE
    cache.save(path, [4])
    cache.clear_memory()
    cache.load(path)
    assert (1, 1, 1, 1) in counting.OPEN_TABLE
    assert (2, 2) in trees.CLOSED_TABLE
    assert trees.trace_closed_type(4, (2, 2)) == trees.CLOSED_TABLE[(2, 2)]


def test_cache_path_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.cache_path() == tmp_path / cache.CACHE_FILE
    monkeypatch.delenv(cache.ENV_VAR)
    assert cache.cache_path() is None
