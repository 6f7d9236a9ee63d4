import pytest

from prosched.errors import BothSidesEmpty, MalformedLine, NotFound, UnknownSymbol
from prosched.lexicon import (dump_lexicon, lint_dictionary, load_lexicon,
                              load_mappings)


class TestLoadLexicon:
    def test_basic_entry_strips_stress(self):
        lex = load_lexicon(b"WHERE  W EH1 R\n")
        assert lex.lookup("where") == (("W", "EH", "R"),)

    def test_alternates_merge_under_base_key(self):
        lex = load_lexicon(b"A  AH0\nA(2)  EY1\n")
        assert lex.lookup("a") == (("AH",), ("EY",))

    def test_stress_retained_flag(self):
        lex = load_lexicon(b"WHERE  W EH1 R\n", retain_stress=True)
        assert lex.lookup("where") == (("W", "EH1", "R"),)

    def test_comments_and_blanks_skipped(self):
        lex = load_lexicon(b";;; header\n\nGO  G OW1\n")
        assert len(lex) == 1

    def test_eeg_stock_entry_loads(self):
        lex = load_lexicon(b"EEG  IY1 IY1 G IY1\n")
        assert lex.lookup("EEG") == (("IY", "IY", "G", "IY"),)

    def test_malformed_line_reports_number(self):
        with pytest.raises(MalformedLine) as err:
            load_lexicon(b"GO  G OW1\nJUNK\n")
        assert err.value.line_no == 2

    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbol) as err:
            load_lexicon(b"GO  G QX1\n")
        assert err.value.symbol == "QX1"
        assert err.value.line_no == 1

    def test_unknown_word_raises_not_found(self):
        lex = load_lexicon(b"GO  G OW1\n")
        with pytest.raises(NotFound):
            lex.lookup("missing")
        assert lex.get("missing") is None
        assert "go" in lex

    def test_dump_then_load_is_fixed_point(self, en_lexicon):
        dumped = dump_lexicon(en_lexicon)
        again = load_lexicon(dumped)
        assert again == en_lexicon
        assert dump_lexicon(again) == dumped


class TestLoadMappings:
    def test_ch_family(self):
        maps = load_mappings(b"ch\tCH\nch\tK\nch\tSH\n")
        assert ("ch", ("CH",)) in maps
        assert ("ch", ("K",)) in maps
        assert ("ch", ("SH",)) in maps

    def test_silent_grapheme(self):
        maps = load_mappings(b"e\t_\n")
        assert ("e", ()) in maps

    def test_insertion_side(self):
        maps = load_mappings(b"_\tZ\n")
        assert ("", ("Z",)) in maps

    def test_duplicates_collapse(self):
        maps = load_mappings(b"e\tEH\ne\tEH\n")
        assert len(maps) == 1

    def test_both_sides_empty(self):
        with pytest.raises(BothSidesEmpty):
            load_mappings(b"_\t_\n")

    def test_missing_tab(self):
        with pytest.raises(MalformedLine):
            load_mappings(b"ch CH\n")

    def test_unknown_phoneme(self):
        with pytest.raises(UnknownSymbol):
            load_mappings(b"ch\tC H\n")

    def test_overlong_sides_rejected(self):
        with pytest.raises(MalformedLine):
            load_mappings(b"abcde\tK\n")
        with pytest.raises(MalformedLine):
            load_mappings(b"a\tK K K K\n")


class TestLint:
    def test_eeg_flagged(self, en_lexicon, en_mappings):
        report = lint_dictionary(en_lexicon, en_mappings)
        words = [w for w, _, _, _ in report]
        assert "eeg" in words
        row = next(r for r in report if r[0] == "eeg")
        assert row[3] > 0

    def test_where_is_clean(self, en_lexicon, en_mappings):
        report = lint_dictionary(en_lexicon, en_mappings)
        assert all(w != "where" for w, _, _, _ in report)

    def test_shipped_dictionary_clean_except_eeg(self, en_lexicon, en_mappings):
        report = lint_dictionary(en_lexicon, en_mappings)
        assert [w for w, _, _, _ in report] == ["eeg"]

    def test_empty_lexicon_empty_report(self, en_mappings):
        lex = load_lexicon(b";;; nothing\n")
        assert lint_dictionary(lex, en_mappings) == []

    def test_sorted_by_descending_cost(self, en_mappings):
        lex = load_lexicon(b"EEG  IY1 IY1 G IY1\nXRAY  Z Z Z Z Z\n")
        report = lint_dictionary(lex, en_mappings)
        costs = [cost for _, _, _, cost in report]
        assert costs == sorted(costs, reverse=True)
