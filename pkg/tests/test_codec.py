import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import greedy_oracle
from semtok.codec import Encoder, decode, decode_pieces, encode_text, encode_word
from semtok.corpus import split_words
from semtok.vocab import Vocabulary

from conftest import CONDITION_FORMS


def vocab_of(tokens):
    return Vocabulary.from_segments(["[PAD]", "[UNK]"], [(t, -1.0) for t in tokens])


@pytest.mark.parametrize("word", sorted(CONDITION_FORMS))
def test_condition_forms(condition_vocab, word):
    assert encode_word(word, condition_vocab) == CONDITION_FORMS[word]


def test_encode_word_examples():
    v = vocab_of(["advis", "##e", "q"])
    assert encode_word("advise", v) == ["advis", "##e"]
    assert encode_word("qx", v) == ["[UNK]"]
    # greedy does not backtrack: "ab" + "##c" would work, but "abc" is tried first
    g = vocab_of(["abc", "ab", "##c", "##cd"])
    assert encode_word("abcd", g) == ["[UNK]"]
    assert encode_word("abcd", vocab_of(["ab", "##cd"])) == ["ab", "##cd"]


def test_max_word_chars():
    v = vocab_of(["a", "##a"])
    assert encode_word("a" * 100, v) == ["a"] + ["##a"] * 99
    assert encode_word("a" * 101, v) == ["[UNK]"]
    assert encode_word("aaa", v, max_word_chars=2) == ["[UNK]"]


def test_encode_text_examples(condition_vocab):
    assert encode_text("", condition_vocab).ids == ()
    enc = encode_text("Condition conditions", condition_vocab)
    assert enc.pieces == ("condit", "##ion", "condit", "##ions")
    assert enc.ids == tuple(condition_vocab.index[p] for p in enc.pieces)
    assert enc.unk_positions == ()
    enc = encode_text("condition x", condition_vocab)
    assert enc.pieces[-1] == "[UNK]" and enc.unk_positions == (2,)


def test_encoder_requires_unk():
    with pytest.raises(ValueError):
        Encoder(Vocabulary.from_segments(["[PAD]"], [("a", -1.0)]))


def test_decode_examples(condition_vocab):
    ids = [condition_vocab.index[p] for p in ["condit", "##ion", "condit", "##ional"]]
    assert decode(ids, condition_vocab) == "condition conditional"
    assert decode([], condition_vocab) == ""
    assert decode([1], condition_vocab) == "[UNK]"
    # a leading continuation piece starts its own word
    assert decode([condition_vocab.index["##ion"]], condition_vocab) == "ion"
    with pytest.raises(IndexError):
        decode([len(condition_vocab)], condition_vocab)
    with pytest.raises(IndexError):
        decode([-1], condition_vocab)
    assert decode_pieces(["condit", "##ions"], condition_vocab) == "conditions"
    with pytest.raises(KeyError):
        decode_pieces(["zzz"], condition_vocab)


letters = "abc"
piece = st.text(alphabet=letters, min_size=1, max_size=4)
token = st.one_of(piece, piece.map(lambda p: "##" + p))


@given(st.lists(token, unique=True, max_size=200), st.text(alphabet=letters, min_size=1, max_size=12))
def test_greedy_matches_oracle(tokens, word):
    v = vocab_of(tokens)
    assert encode_word(word, v) == greedy_oracle(word, tokens)


@given(st.lists(token, unique=True, max_size=60),
       st.lists(st.text(alphabet=letters, min_size=1, max_size=8), max_size=6))
def test_roundtrip_when_unk_free(tokens, words):
    v = vocab_of(tokens)
    enc = encode_text(" ".join(words), v)
    if not enc.unk_positions:
        assert decode(enc.ids, v) == " ".join(words)


@given(st.lists(token, unique=True, max_size=60),
       st.lists(st.text(alphabet="abc .,", max_size=10), max_size=5))
def test_encoding_concatenates(tokens, chunks):
    v = vocab_of(tokens)
    text = " ".join(chunks)
    whole = encode_text(text, v)
    per_word = [p for w in split_words(text) for p in encode_word(w, v)]
    assert list(whole.pieces) == per_word
    joined = [p for c in chunks for p in encode_text(c, v).pieces]
    assert list(whole.pieces) == joined


@given(st.lists(token, unique=True, max_size=60), st.text(alphabet=letters, min_size=1, max_size=10))
def test_pieces_well_formed(tokens, word):
    closed = set(tokens) | set(letters) | {"##" + c for c in letters}
    pieces = encode_word(word, vocab_of(sorted(closed)))
    assert pieces != ["[UNK]"]
    assert not pieces[0].startswith("##")
    assert all(p.startswith("##") for p in pieces[1:])
    assert pieces[0] + "".join(p[2:] for p in pieces[1:]) == word
