"""Taxonomy file parsing and the built-in classification table."""

from __future__ import annotations

import pytest

from netcomplexity import Taxonomy, TaxonomyError, VertexCategory


def test_default_table_covers_all_four_dialects():
    tax = Taxonomy.default()
    assert len(tax) == 40
    assert tax.resolve("azure", "vm") == (VertexCategory.INFRASTRUCTURE, True)
    assert tax.resolve("azure", "peering") == (VertexCategory.POLICY, False)
    assert tax.resolve("k8s", "pod") == (VertexCategory.INFRASTRUCTURE, True)
    assert tax.resolve("k8s", "label") == (VertexCategory.POLICY, False)
    assert tax.resolve("cli", "port") == (VertexCategory.INFRASTRUCTURE, True)
    assert tax.resolve("cli", "vlan") == (VertexCategory.INFRASTRUCTURE, False)
    assert tax.resolve("aci", "port") == (VertexCategory.INFRASTRUCTURE, True)
    assert tax.resolve("aci", "epg") == (VertexCategory.POLICY, False)
    for dialect in ("azure", "k8s", "cli", "aci"):
        assert tax.resolve(dialect, "ipv4") == (VertexCategory.ADDRESS_LITERAL, False)


def test_missing_entry_names_type_and_dialect():
    tax = Taxonomy.default()
    with pytest.raises(
        TaxonomyError, match="no taxonomy entry for type 'foo' in dialect 'azure'"
    ):
        tax.resolve("azure", "foo")
    assert tax.get("azure", "foo") is None


def test_comments_and_blank_lines_are_ignored():
    tax = Taxonomy.from_text(
        """
        # comment line
        d1 widget infrastructure 1   # trailing comment

        d1 rule policy 0
        """
    )
    assert len(tax) == 2
    assert tax.resolve("d1", "widget") == (VertexCategory.INFRASTRUCTURE, True)


def test_wrong_column_count_names_the_line():
    with pytest.raises(TaxonomyError, match="<text> line 2: expected 4 columns"):
        Taxonomy.from_text("d1 a infrastructure 0\nd1 b infrastructure\n")


def test_unknown_category_is_rejected():
    with pytest.raises(TaxonomyError, match="unknown category 'gadget'"):
        Taxonomy.from_text("d1 a gadget 0\n")


def test_endpoint_flag_must_be_zero_or_one():
    with pytest.raises(TaxonomyError, match="endpoint flag must be 0 or 1"):
        Taxonomy.from_text("d1 a infrastructure yes\n")


def test_duplicate_entries_are_rejected():
    with pytest.raises(TaxonomyError, match="duplicate entry"):
        Taxonomy.from_text("d1 a policy 0\nd1 a policy 0\n")


def test_empty_table_is_rejected():
    with pytest.raises(TaxonomyError, match="no taxonomy entries"):
        Taxonomy.from_text("# nothing here\n")


def test_from_file_reports_errors_with_the_path(tmp_path):
    good = tmp_path / "tax.txt"
    good.write_text("d1 a policy 0\n", encoding="utf-8")
    assert Taxonomy.from_file(good).resolve("d1", "a") == (VertexCategory.POLICY, False)

    bad = tmp_path / "bad.txt"
    bad.write_text("d1 a nonsense 0\n", encoding="utf-8")
    with pytest.raises(TaxonomyError, match="bad.txt line 1"):
        Taxonomy.from_file(bad)
