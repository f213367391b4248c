"""Lexical diversity catalogue bindings."""

from ._core import (
    LexdivError,
    Store,
    cognate_clusters,
    diversity_index,
    export_lexicon,
    export_lexicon_set,
    export_raw,
    fixture_store,
    layout,
    lexicon_similarity,
    load_data_dir,
    similarity_matrix,
    write_fixtures,
)

# args are (code, message)
LexdivError.code = property(lambda self: self.args[0])

__all__ = [
    "LexdivError",
    "Store",
    "cognate_clusters",
    "diversity_index",
    "export_lexicon",
    "export_lexicon_set",
    "export_raw",
    "fixture_store",
    "layout",
    "lexicon_similarity",
    "load_data_dir",
    "similarity_matrix",
    "write_fixtures",
]
