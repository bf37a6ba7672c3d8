# Copyright (c) 2026 The hexec Authors. All rights reserved.
import random

import pytest
from pydantic import ValidationError
from utils import facts_lines, read_lines, write_lines

from hexec.common.config import NormalizationOptions, ReaderSettings
from hexec.common.results import HexecExceptionConfigError, HexecExceptionInputError
from hexec.readers.base import Passage, ReaderCandidate, ReaderRequest, rank_candidates
from hexec.readers.factory import create_reader
from hexec.readers.fixture import FixtureReader
from hexec.readers.oracle import FactStore, OracleReader
from hexec.readers.remote import RemoteReader
from hexec.readers.service import encode_passages
from hexec.readers.wire import WireRequest, WireResponse

RC = ReaderCandidate


@pytest.mark.fast
def test_oracle_reader():
    reader = OracleReader(FactStore({"who is winner of 1894-95 FA Cup": ["Aston Villa"]}))
    examples = [
        {"question": "who is winner of 1894-95 FA Cup", "answers": [RC("Aston Villa", 1.0)]},
        # Lookup ignores case, punctuation and articles.
        {"question": "Who is the winner of 1894-95 FA Cup?", "answers": [RC("Aston Villa", 1.0)]},
        {"question": "who is winner of 1895-96 FA Cup", "answers": []},
    ]
    for e in examples:
        assert reader.answer(ReaderRequest(e["question"])) == e["answers"], e


@pytest.mark.fast
def test_oracle_reader_ranks():
    reader = OracleReader(FactStore({"q": ["a1", "a2", "a3"]}))
    assert reader.answer(ReaderRequest("q")) == [RC("a1", 1.0), RC("a2", 0.9), RC("a3", 0.8)]
    assert [c.answer for c in reader.answer(ReaderRequest("q", top_k=2))] == ["a1", "a2"]


@pytest.mark.fast
def test_fact_store():
    store = FactStore({"Who is X?": ["a"]})
    store.add("who is x", ["a", "b"])
    assert store.lookup("WHO IS X") == ["a", "b"]
    assert "Who is X?" in store
    assert len(store) == 1
    assert store.to_lines() == [{"question": "Who is X?", "answers": ["a", "b"]}]

    strict = FactStore({"Who is X?": ["a"]}, NormalizationOptions(strip_punctuation=False))
    assert strict.lookup("who is x") == []


@pytest.mark.fast
def test_fact_store_files(tmp_path):
    path = str(tmp_path / "facts.jsonl")
    FactStore({"q1": ["a"], "q2": ["b", "c"]}).dump(path)
    assert read_lines(path) == [
        {"question": "q1", "answers": ["a"]},
        {"question": "q2", "answers": ["b", "c"]},
    ]
    assert FactStore.load(path).lookup("q2") == ["b", "c"]

    bad = write_lines(str(tmp_path / "bad.jsonl"), [{"question": "q1", "answers": "a"}])
    with pytest.raises(HexecExceptionInputError):
        FactStore.load(bad)


@pytest.mark.fast
def test_fixture_reader():
    reader = FixtureReader(
        [
            ("member of sports team", [RC("Birmingham City", 0.4), RC("Aston Villa", 0.6)]),
            ("sports", [RC("Chelsea", 1.0)]),
            (r"winner of \d{4}", [RC("Aston Villa", 1.0)]),
        ]
    )
    examples = [
        {"question": "what is MEMBER of sports team of Duane Courtney", "answers": ["Aston Villa", "Birmingham City"]},
        {"question": "which sports club", "answers": ["Chelsea"]},
        {"question": "who is winner of 1894-95 FA Cup", "answers": ["Aston Villa"]},
        {"question": "who painted the Mona Lisa", "answers": []},
    ]
    for e in examples:
        assert [c.answer for c in reader.answer(ReaderRequest(e["question"]))] == e["answers"], e

    assert reader.answer(ReaderRequest("member of sports team", top_k=1)) == [RC("Aston Villa", 0.6)]

    with pytest.raises(HexecExceptionConfigError):
        FixtureReader([("(unclosed", [])])


@pytest.mark.fast
def test_fixture_reader_load(tmp_path):
    path = write_lines(
        str(tmp_path / "script.jsonl"),
        [{"pattern": "FA Cup", "candidates": [{"answer": "Aston Villa", "score": 0.7}, {"answer": "Everton"}]}],
    )
    reader = FixtureReader.load(path)
    assert reader.answer(ReaderRequest("who won the FA Cup")) == [RC("Everton", 1.0), RC("Aston Villa", 0.7)]

    bad = write_lines(str(tmp_path / "bad.jsonl"), [{"pattern": "x"}])
    with pytest.raises(HexecExceptionConfigError):
        FixtureReader.load(bad)


@pytest.mark.fast
def test_readers_return_ranked_candidates():
    rng = random.Random(4)
    for _ in range(200):
        candidates = [RC(f"a{i}", round(rng.random(), 3)) for i in range(rng.randint(0, 8))]
        top_k = rng.randint(1, 6)
        answers = FixtureReader([("q", candidates)]).answer(ReaderRequest("q", top_k=top_k))
        assert len(answers) <= top_k
        assert [c.score for c in answers] == sorted((c.score for c in answers), reverse=True)
        assert rank_candidates(candidates, top_k) == answers


@pytest.mark.fast
def test_create_reader(tmp_path):
    facts = write_lines(str(tmp_path / "facts.jsonl"), facts_lines({"q": ["a"]}))
    script = write_lines(str(tmp_path / "script.jsonl"), [{"pattern": "q", "candidates": [{"answer": "a"}]}])

    reader = create_reader(ReaderSettings(kind="oracle", facts=facts))
    assert isinstance(reader, OracleReader)
    assert reader.answer(ReaderRequest("q")) == [RC("a", 1.0)]

    assert isinstance(create_reader(ReaderSettings(kind="fixture", script=script)), FixtureReader)

    remote = create_reader(
        ReaderSettings(kind="remote", endpoint="http://127.0.0.1:1/answer", timeout=3.0, retries=4)
    )
    assert isinstance(remote, RemoteReader)
    assert (remote.timeout, remote.retries) == (3.0, 4)

    for settings in [
        ReaderSettings(kind="oracle"),
        ReaderSettings(kind="fixture"),
        ReaderSettings(kind="remote"),
        ReaderSettings(kind="neural"),
    ]:
        with pytest.raises(HexecExceptionConfigError):
            create_reader(settings)


@pytest.mark.fast
def test_reader_request():
    request = ReaderRequest("q", [Passage("t", "x")], top_k=3)
    assert request.passages == (Passage("t", "x"),)
    with pytest.raises(ValueError):
        ReaderRequest("q", top_k=0)
    assert Passage.from_dict({"title": "t"}) == Passage("t", "")


@pytest.mark.fast
def test_wire_models():
    request = ReaderRequest("q", [Passage("Aston Villa F.C.", "Founded 1874.")], top_k=2)
    body = WireRequest.from_request(request).dict()
    assert body == {
        "question": "q",
        "passages": [{"title": "Aston Villa F.C.", "text": "Founded 1874."}],
        "top_k": 2,
    }
    assert WireRequest.parse_obj(body).to_request() == request

    with pytest.raises(ValidationError):
        WireRequest.parse_obj({"question": "q", "top_k": 0})
    with pytest.raises(ValidationError):
        WireResponse.parse_obj({"answers": []})

    response = WireResponse.parse_obj({"candidates": [{"answer": "a", "score": "0.5"}]})
    assert response.to_candidates() == [RC("a", 0.5)]


@pytest.mark.fast
def test_encode_passages():
    assert encode_passages("Who?", []) == ["question: Who?"]
    assert encode_passages("Who?", [Passage("T1", "C1"), Passage("T2", "C2")]) == [
        "question: Who? title: T1 context: C1",
        "question: Who? title: T2 context: C2",
    ]
