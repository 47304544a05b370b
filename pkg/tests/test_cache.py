import pytest

from klchar import Context
from klchar.cache import (
    cache_load,
    cache_path,
    cache_store,
    default_cache_dir,
    dumps,
    loads,
    verify_table,
)
from klchar.errors import CacheError
from klchar.laurent import V


@pytest.fixture
def warm():
    c = Context("A2sc")
    for w in c.group.ball(8):
        c.hecke.kl_element(w)
    return c


def test_round_trip_is_identity(warm, tmp_path):
    G = warm.group
    table = dict(warm.hecke.kl_memo)
    assert len(table) >= 100
    text = dumps(G, table)
    assert loads(G, text) == table
    assert dumps(G, loads(G, text)) == text
    path = tmp_path / "t.txt"
    cache_store(path, G, table)
    cache_store(path, G, table)
    assert path.read_text() == text
    assert cache_load(path, G) == table


def test_empty_and_missing(tmp_path):
    G = Context("A1sc").group
    assert loads(G, "") == {}
    assert cache_load(tmp_path / "nope.txt", G) == {}


def test_header_errors(warm):
    G = warm.group
    text = dumps(G, warm.hecke.kl_memo)
    with pytest.raises(CacheError, match="datum"):
        loads(G, text.replace("A2sc", "B2sc", 1))
    with pytest.raises(CacheError, match="version"):
        loads(G, text.replace("v1", "v9", 1))
    with pytest.raises(CacheError, match="header"):
        loads(G, "NOTACACHE v1 A2sc\n")


def test_corruption_detected(warm):
    G = warm.group
    lines = dumps(G, warm.hecke.kl_memo).splitlines()
    broken = list(lines)
    broken[5] = broken[5][:-7]
    with pytest.raises(CacheError, match="line 6"):
        loads(G, "\n".join(broken))
    dup = lines + [lines[3]]
    with pytest.raises(CacheError, match="duplicate"):
        loads(G, "\n".join(dup))


def test_verify_reports_semantic_defects(warm):
    H, G = warm.hecke, warm.group
    table = {w: dict(h) for w, h in H.kl_memo.items()}
    assert verify_table(H, table) == []
    w = G.from_word([0, 1, 2])
    y = next(y for y in table[w] if y != w)
    table[w][y] = table[w][y] + V**2
    defects = verify_table(H, table)
    assert defects and all("s0s1s2" in d for d in defects)


def test_context_persistence(tmp_path):
    c = Context("A1sc")
    for w in c.group.ball(6):
        c.hecke.kl_element(w)
    c.module.as_canonical(c.group.from_word([0, 1, 0]))
    c.save_cache(tmp_path)
    fresh = Context("A1sc")
    assert fresh.load_cache(tmp_path) >= 13
    assert fresh.hecke.kl_memo == c.hecke.kl_memo
    assert cache_path(tmp_path, "A1sc").exists()


def test_default_dir_respects_env(monkeypatch, tmp_path):
    monkeypatch.setenv("KLCHAR_CACHE_DIR", str(tmp_path))
    assert default_cache_dir() == tmp_path
    monkeypatch.delenv("KLCHAR_CACHE_DIR")
    assert default_cache_dir().name == "klchar"
