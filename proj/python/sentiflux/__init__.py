"""Lexicon-based tweet sentiment scoring.

The heavy lifting lives in the compiled extension ``sentiflux._core``; this
package re-exports its surface.

Quick start::

    import sentiflux

    lex = sentiflux.Lexicon.from_file("data/demo.lex")
    result = sentiflux.score("the movie was not good", lex, mode="final-flip")
    print(result["label"], result["score_display"])
"""

from sentiflux._core import (
    Lexicon,
    benchmark,
    evaluate_pairs,
    extract_hashtags,
    reference_score,
    run_file,
    score,
    synth_corpus,
    tokenize,
    __version__,
)

__all__ = [
    "Lexicon",
    "benchmark",
    "evaluate_pairs",
    "extract_hashtags",
    "reference_score",
    "run_file",
    "score",
    "synth_corpus",
    "tokenize",
    "__version__",
]
