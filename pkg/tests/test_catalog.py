import pytest

from sextics.catalog import (
    ConfigSyntaxError,
    builtin_catalog,
    builtin_examples,
    format_config,
    parse_config,
    verify_example,
    weak_zariski_groups,
)
from sextics.globalinv import corollary_ceiling
from sextics.localsing.classify import SingType, normal_form_germ
from sextics.localsing import analyze_germ

# invariants of each type, computed once from normal forms
_GERM_CACHE = {}


def _germ_data(t: SingType):
    key = (t.family, tuple(t.index))
    if key not in _GERM_CACHE:
        _GERM_CACHE[key] = analyze_germ(normal_form_germ(t))
    return _GERM_CACHE[key]


def type_delta(t: SingType) -> int:
    return _germ_data(t).delta


def type_mu(t: SingType) -> int:
    return _germ_data(t).mu


class TestParseConfig:
    def test_counts_and_index(self):
        c = parse_config("[A_5,4A_2,2A_1]_2")
        assert c.index_tag == 2 and not c.mr
        assert dict((e.sing_type.name(), e.count) for e in c.entries) == \
            {"A_5": 1, "A_2": 4, "A_1": 2}

    def test_mr_flag(self):
        assert parse_config("[3A_5,2A_2]^mr").mr

    def test_empty(self):
        c = parse_config("[]")
        assert c.entries == () and str(c) == "[]"

    def test_braced_types(self):
        c = parse_config("[B_{3,6},C_{3,7},D_{4,7},Sp_2]")
        assert len(c.entries) == 4

    def test_bad_type(self):
        with pytest.raises(ConfigSyntaxError):
            parse_config("[F_4]")

    def test_roundtrip_catalog(self):
        for e in builtin_catalog():
            text = format_config(e.reduced)
            again = parse_config(text)
            assert again.multiset() == e.reduced.multiset()
            assert again.index_tag == e.reduced.index_tag
            assert again.mr == e.reduced.mr
            assert format_config(again) == text


class TestCatalogData:
    def test_total_counts(self):
        entries = builtin_catalog()
        t1 = [e for e in entries if e.theorem == 1]
        t2 = [e for e in entries if e.theorem == 2]
        assert len(t1) == 89
        assert len(t2) == 49

    def test_degrees_sum_to_six(self):
        for e in builtin_catalog():
            assert sum(e.component_type) == 6, e.reduced

    def test_inner_subset_of_reduced(self):
        for e in builtin_catalog():
            reduced = {k[:2]: k[2] for k in e.reduced.multiset()}
            for fam, idx, count in e.inner.multiset():
                assert reduced.get((fam, idx), 0) >= count, e.reduced

    def test_lookup_a17(self):
        found = sorted(str(e.reduced) for e in builtin_catalog()
                       if e.inner.multiset() ==
                       parse_config("[A_17]").multiset())
        assert found == ["[A_17,2A_1]^mr", "[A_17,A_1]_2", "[A_17,A_2]_2^mr",
                         "[A_17]_2"]
        for e in builtin_catalog():
            if e.inner.multiset() == parse_config("[A_17]").multiset():
                assert e.component_type == (3, 3)

    def test_lookup_b66(self):
        rows = [e for e in builtin_catalog()
                if any(x == ("B", (6, 6)) for x, _c in
                       [((i.sing_type.family, tuple(i.sing_type.index)),
                         i.count) for i in e.reduced.entries])]
        assert len(rows) == 1 and str(rows[0].reduced) == "[B_{6,6}]"

    def test_stated_component_budgets(self):
        # rows with stated per-component configurations respect Corollary 1
        for e in builtin_catalog():
            if not e.component_sigma:
                continue
            total = 0
            for _deg, cfg in e.component_sigma:
                for fam, idx, count in cfg.multiset():
                    total += count * type_delta(SingType(fam, idx))
            assert total <= corollary_ceiling(e.component_type), e.reduced

    def test_index_subscript_integrity(self):
        # one configuration ([3A_5,2A_2]^mr on two cubics) is enumerated
        # under two inner configurations -- the double torus expression --
        # so the uniqueness key includes the inner configuration
        seen = {}
        for e in builtin_catalog():
            key = (e.inner.multiset(), e.reduced.multiset(),
                   e.component_type,
                   tuple((d, c.multiset()) for d, c in e.component_sigma),
                   e.intersection)
            assert key not in seen, (e.reduced, seen.get(key))
            seen[key] = e.reduced

    def test_mr_flags_match_type_arithmetic(self):
        # mr printed iff every type is simple and the Milnor numbers sum
        # to 19, for all 138 rows
        for e in builtin_catalog():
            total = 0
            simple = True
            for fam, idx, count in e.reduced.multiset():
                t = SingType(fam, idx)
                total += count * type_mu(t)
                simple = simple and t.is_simple()
            assert e.reduced.mr == (simple and total == 19), \
                (str(e.reduced), total, simple)

    def test_double_torus_expression_row(self):
        rows = [e for e in builtin_catalog()
                if e.reduced.multiset() ==
                parse_config("[3A_5,2A_2]").multiset()]
        assert len(rows) == 2
        assert {str(e.inner.format(with_tags=False)) for e in rows} == \
            {"[2A_5,2A_2]", "[3A_5]"}


class TestWeakZariski:
    def test_a5_4a2_a3_2a1_group(self):
        groups = {g["reduced"]: g for g in
                  weak_zariski_groups(builtin_catalog())}
        g1 = groups["[A_5,A_3,4A_2,2A_1]"]
        assert g1["realizations"] >= 3
        assert g1["implied_irreducible"]

    def test_2a5_2a2_3a1_four_cases(self):
        groups = {g["reduced"]: g for g in
                  weak_zariski_groups(builtin_catalog())}
        g2 = groups["[2A_5,2A_2,3A_1]"]
        assert g2["realizations"] == 4
        assert not g2["implied_irreducible"]

    def test_b66_singleton(self):
        groups = {g["reduced"]: g for g in
                  weak_zariski_groups(builtin_catalog())}
        assert "[B_{6,6}]" not in groups


class TestExamples:
    def test_corpus_size(self):
        records = builtin_examples()
        assert len(records) >= 25
        ids = [r.rid for r in records]
        assert len(set(ids)) == len(ids)

    def test_all_polys_parse(self):
        for rec in builtin_examples():
            rec.doc.all_polys()

    def test_single_record_verifies(self):
        recs = {r.rid: r for r in builtin_examples()}
        rep = verify_example(recs["5.2-5"])
        assert rep.clean()
        kinds = {v.claim.kind: v.status for v in rep.verdicts}
        assert kinds["config"] == "verified"
