"""Semantic subword tokenizer: stem/suffix vocabulary segment plus BPE residual."""

from .codec import Encoder, Encoding, decode, encode_text, encode_word
from .corpus import NormalizationConfig, WordFrequencyTable, build_frequency_table, normalize_text, split_words
from .stemmer import StemSplit, split_stem_suffix, stem
from .trainer import TrainerConfig, train, train_from_table
from .vocab import Vocabulary, deserialize_model, export_bert_vocab, serialize_model

__all__ = [
    "Encoder", "Encoding", "decode", "encode_text", "encode_word",
    "NormalizationConfig", "WordFrequencyTable", "build_frequency_table", "normalize_text", "split_words",
    "StemSplit", "split_stem_suffix", "stem",
    "TrainerConfig", "train", "train_from_table",
    "Vocabulary", "deserialize_model", "export_bert_vocab", "serialize_model",
]
