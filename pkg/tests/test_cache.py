import json
import os

import pytest

from src.core.cache import (
    KIND_FULL_KL,
    KIND_JI_POSET,
    KIND_PENULTIMATE,
    cache_path,
    cached_join_irreducibles,
    cached_kl_table,
    decode_penultimate,
    encode_penultimate,
    load_cache,
    save_cache,
)
from src.core.cells import build_atlas, closed_form_assignment
from src.core.coxeter import build_system, enumerate_group
from src.core.ji_catalog import join_irreducibles
from src.utils.errors import CacheError


def test_cache_path_uses_environment(cache_dir, systems):
    path = cache_path(systems["B2"], KIND_FULL_KL)
    assert path == os.path.join(str(cache_dir), "b2_full-kl.json")
    with pytest.raises(CacheError):
        cache_path(systems["B2"], "images")


def test_missing_cache_is_none(cache_dir, systems):
    assert load_cache(systems["A2"], KIND_PENULTIMATE) is None


def test_cache_rejects_other_system(cache_dir, systems):
    path = save_cache(systems["A2"], KIND_PENULTIMATE, {"x": 1})
    os.replace(path, cache_path(systems["B2"], KIND_PENULTIMATE))
    with pytest.raises(CacheError):
        load_cache(systems["B2"], KIND_PENULTIMATE)


def test_cache_rejects_corrupt_json(cache_dir, systems):
    path = cache_path(systems["G2"], KIND_JI_POSET)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("{no es json")
    with pytest.raises(CacheError):
        load_cache(systems["G2"], KIND_JI_POSET)


def test_kl_table_is_reused(cache_dir, kl_tables):
    group = enumerate_group(build_system("A3"))
    first = cached_kl_table(group)
    assert os.path.exists(cache_path(group.system, KIND_FULL_KL))
    second = cached_kl_table(group)
    reference = kl_tables["A3"]
    for w in group.elements:
        for x in group.elements:
            assert second.polynomial(x, w) == first.polynomial(x, w) == reference.polynomial(x, w)


def test_penultimate_encoding(systems):
    atlas = build_atlas(systems["B3"])
    assignment = closed_form_assignment(atlas)
    payload = json.loads(json.dumps(encode_penultimate(assignment)))
    assert decode_penultimate(atlas, payload).values == assignment.values
    payload.popitem()
    with pytest.raises(CacheError):
        decode_penultimate(atlas, payload)


def test_join_irreducibles_cache(cache_dir, systems):
    d4 = systems["D4"]
    pairs = [("1", "1"), ("0+", "2")]
    computed = cached_join_irreducibles(d4, pairs)
    assert load_cache(d4, KIND_JI_POSET) is not None
    reread = cached_join_irreducibles(d4, pairs)
    for pair in pairs:
        assert reread[pair] == computed[pair] == list(join_irreducibles(d4, *pair))
