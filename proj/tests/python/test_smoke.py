import json
import os
import pathlib

import pytest

import gqs

DOCS = pathlib.Path(os.environ.get("GQS_DOCUMENTS_DIR", pathlib.Path(__file__).resolve().parents[2] / "documents"))


def z8():
    return gqs.ring_as_module(gqs.cyclic_ring(8))


def test_ideals_of_z8_are_multiples():
    ideals = gqs.enumerate_ideals(gqs.cyclic_ring(8))
    assert [i.elements for i in ideals] == [[0], [0, 4], [0, 2, 4, 6], list(range(8))]


def test_split_pair_has_four_graded_submodules():
    m = gqs.product_module([(2, 0), (2, 1)], gqs.cyclic_ring(2))
    subs = gqs.enumerate_submodules(m)
    assert len(subs) == 4
    assert all(3 not in n or len(n) == 4 for n in subs)


def test_semiprime_and_quasi_semiprime():
    m = z8()
    four = gqs.submodule(m, [4])
    assert gqs.check_semiprime_submodule(four) == (False, (2, 1, 2))
    assert not gqs.is_quasi_semiprime_submodule(four)
    two = gqs.submodule(m, [2])
    assert gqs.is_semiprime_submodule(two)
    assert gqs.is_quasi_semiprime_submodule(two)
    assert gqs.colon_ideal(four).elements == [0, 4]
    assert gqs.radical(gqs.colon_ideal(four)).elements == [0, 2, 4, 6]


def test_errors_carry_kind_and_witness():
    m = gqs.product_module([(2, 0), (2, 1)], gqs.cyclic_ring(2))
    with pytest.raises(gqs.GqsError) as info:
        gqs.submodule(m, [3])
    assert info.value.kind == "not-graded"
    assert info.value.witness == "(1,1)"


def test_integer_examples():
    free = gqs.z_module(free=2, torsion=[], degrees=[0, 1])
    n = gqs.z_submodule(free, [[4, 0]])
    assert gqs.z_colon_ideal(n) == 0
    assert gqs.z_is_quasi_semiprime(n)
    assert gqs.z_witness_not_semiprime(n, 2, [3, 0], 2)
    assert [12, 0] in n and [6, 0] not in n

    cyc = gqs.z_module(free=0, torsion=[8], degrees=[0])
    n8 = gqs.z_submodule(cyc, [[4]])
    assert gqs.z_colon_ideal(n8) == 4
    assert not gqs.z_is_semiprime_ideal(4)
    assert gqs.z_check_semiprime_torsion(n8) == (False, (2, [1], 2))


def test_documents_load():
    s = gqs.load_structure(str(DOCS / "free_rank_two.json"))
    assert s.is_integer
    assert gqs.z_colon_ideal(s.zsubmodules["N"]) == 0
    finite = gqs.load_structure(str(DOCS / "z8_self.json"))
    assert not finite.is_integer
    assert finite.submodules["Four"].elements == [0, 4]


def test_canonical_document_round_trips():
    text = (DOCS / "split_z2_pair.json").read_text()
    once = gqs.canonical_document(text)
    assert gqs.canonical_document(once) == once
    assert json.loads(once)["schema"] == "gqs-structure/1"


def test_verify_and_search():
    assert len(gqs.theorems()) == 10
    report = gqs.verify(gqs.theorems()[0], catalog="small")
    assert report["status"] == "PASS"
    assert report["violations"] == []
    found = gqs.search(catalog="small")
    assert found["exhausted"]
    assert any(hit["submodule"] == "<(4,0)>" for hit in found["integer_found"])


def test_cli_in_process():
    status, out, _ = gqs.run(["check", "semiprime", "-s", str(DOCS / "free_rank_two.json"), "-N", "N"])
    assert status == 0
    assert out == "false  witness: r=2 m=(3,0) n=2\n"
    status, _, _ = gqs.run(["--seedless", "search"])
    assert status == 2
