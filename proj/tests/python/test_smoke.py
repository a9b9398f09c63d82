"""Smoke tests for the sentiflux extension module."""

import os

import pytest

import sentiflux

TABLE1_PLUS = [
    "weaksubj\tabandoned\tadj\tn\tnegative",
    "strongsubj\tneeded\tverb\tn\tblindnegation",
    "strongsubj\tnot\tadvb\tn\tnegation",
    "strongsubj\tneither\tconj\tn\tnegation",
    "strongsubj\tnor\tconj\tn\tnegation",
    "strongsubj\t:)\temoti\tn\tpositive",
    "strongsubj\t:(\temoti\tn\tnegative",
    "strongsubj\tgood\tanypos\tn\tpositive",
]


@pytest.fixture(scope="module")
def lexicon():
    return sentiflux.Lexicon.from_lines(TABLE1_PLUS)


def test_lexicon_loading(lexicon):
    assert lexicon.entry_count == len(TABLE1_PLUS)
    assert lexicon.warnings == []
    entry = lexicon.lookup("abandoned")
    assert entry["polarity"] == "negative"
    assert entry["strength"] == "weaksubj"
    assert lexicon.lookup("nope") is None
    assert set(lexicon.emoticons()) == {":)", ":("}


def test_lexicon_from_file():
    data_dir = os.environ.get("SENTIFLUX_DATA_DIR")
    if not data_dir:
        pytest.skip("SENTIFLUX_DATA_DIR not set")
    lex = sentiflux.Lexicon.from_file(os.path.join(data_dir, "demo.lex"))
    assert lex.entry_count > 50
    report = lex.report()
    assert report["entry_count"] == lex.entry_count


def test_tokenize_kinds(lexicon):
    tokens = sentiflux.tokenize("Loved #Gravity :) http://t.co/x @bob", lexicon)
    assert [t["kind"] for t in tokens] == ["word", "hashtag", "emoticon", "url", "mention"]
    assert tokens[0]["surface"] == "loved"
    assert tokens[1]["surface"] == "gravity"
    assert sentiflux.extract_hashtags("#A b #c #a", lexicon) == ["a", "c"]


def test_modes_disagree_on_not_good(lexicon):
    literal = sentiflux.score("the movie was not good", lexicon, mode="literal")
    flipped = sentiflux.score("the movie was not good", lexicon, mode="final-flip")
    assert literal["label"] == "positive"
    assert literal["score"] == 2
    assert flipped["label"] == "negative"
    assert flipped["score"] == -2
    assert flipped["score_display"] == -1.0


def test_blind_negation(lexicon):
    result = sentiflux.score("the acting needed to be better", lexicon)
    assert result["label"] == "negative"
    assert result["blind_negation"] is True


def test_reference_scorer_agrees(lexicon):
    for text in ["not good", "good :(", "neither good nor good", ""]:
        for mode in ("literal", "final-flip"):
            fast = sentiflux.score(text, lexicon, mode=mode)
            ref = sentiflux.reference_score(text, lexicon, mode=mode)
            assert fast["label"] == ref["label"]
            assert fast["score"] == 2 * ref["senti_score"]


def test_invalid_mode_raises(lexicon):
    with pytest.raises(ValueError):
        sentiflux.score("good", lexicon, mode="sideways")


def test_synth_and_benchmark(lexicon):
    corpus = sentiflux.synth_corpus(lexicon, n=50, seed=7)
    assert len(corpus) == 50
    assert corpus == sentiflux.synth_corpus(lexicon, n=50, seed=7)
    assert all(r["gold"] in {"positive", "negative", "neutral"} for r in corpus)

    summary = sentiflux.benchmark(lexicon, n=200, seed=1, parallelism=2)
    assert summary["tweets_processed"] == 200
    assert summary["throughput_tps"] > 0


def test_run_file(tmp_path, lexicon):
    path = tmp_path / "tweets.jsonl"
    path.write_text('{"id":"a","text":"good :)"}\n{"text":"not good"}\nbroken\n')
    out_path = tmp_path / "scored.jsonl"
    summary = sentiflux.run_file(
        lexicon, str(path), format="jsonl", mode="final-flip", output_path=str(out_path)
    )
    assert summary["tweets_processed"] == 2
    assert summary["records_skipped"] == 1
    assert summary["counts"]["positive"] == 1
    assert summary["counts"]["negative"] == 1
    assert len(out_path.read_text().splitlines()) == 2


def test_evaluate_pairs():
    report = sentiflux.evaluate_pairs(
        [
            ("positive", "positive"),
            ("positive", "negative"),
            ("neutral", "neutral"),
            ("negative", "negative"),
        ]
    )
    assert report["accuracy"] == 0.75
    assert report["n_evaluated"] == 4
    assert report["per_class"]["negative"]["recall"] == 0.5
