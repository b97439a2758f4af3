"""Чтение и очистка пакетных файлов."""

import pandas as pd
import pytest

from data import (
    FileFormatError,
    InstanceRow,
    clean_dataframe,
    clean_int,
    clean_vector,
    load_instances,
    normalize_column_name,
    parse_file,
)


class TestCleaner:
    @pytest.mark.parametrize("value,expected", [
        (3, 3),
        (3.0, 3),
        (" -2 ", -2),
        ("+4", 4),
        ("5.0", 5),
        ("—", None),
        ("нет", None),
        ("", None),
        (None, None),
        (float("nan"), None),
    ])
    def test_clean_int(self, value, expected):
        assert clean_int(value) == expected

    @pytest.mark.parametrize("value", ["2.5", 2.5, "abc", "1,2"])
    def test_clean_int_rejects(self, value):
        with pytest.raises(ValueError):
            clean_int(value)

    @pytest.mark.parametrize("value,expected", [
        ("1,2,3", [1, 2, 3]),
        ("1 2 3", [1, 2, 3]),
        ("(-3; -1)", [-3, -1]),
        ("[0, 2]", [0, 2]),
        (2.0, [2]),
        ("()", []),
        ("-", None),
    ])
    def test_clean_vector(self, value, expected):
        assert clean_vector(value) == expected

    def test_clean_vector_rejects(self):
        with pytest.raises(ValueError):
            clean_vector("1, x")

    @pytest.mark.parametrize("name,expected", [
        ("k", "k"),
        (" N ", "n"),
        ("Вид", "kind"),
        ("Нижняя строка k", "k"),
        ("upper bound", "b"),
        ("комментарий", None),
    ])
    def test_column_names(self, name, expected):
        assert normalize_column_name(name) == expected

    def test_clean_dataframe(self):
        df = pd.DataFrame({
            "вид": ["hmt", "vsast", "", "tree", "hmt"],
            "n": ["3", "2", "4", "3", "2.5"],
            "l": ["", "3", "", "", ""],
            "b": ["2", "", "", "2", "1"],
            "k": ["0,2", "", "", "0 1", "0"],
            "s": ["", "", "", "1,0", ""],
            "заметки": ["", "", "", "", ""],
        })
        batch = clean_dataframe(df)
        assert batch.rows == [
            InstanceRow(kind="hmt", n=3, b=2, k=[0, 2]),
            InstanceRow(kind="vsast", n=2, l=3),
            InstanceRow(kind="tree", n=3, b=2, k=[0, 1], s=[1, 0]),
        ]
        warnings = " ".join(batch.parsing_warnings)
        assert "'заметки'" in warnings
        assert "Строка 4" in warnings
        assert "Строка 6" in warnings

    def test_required_columns(self):
        with pytest.raises(ValueError):
            clean_dataframe(pd.DataFrame({"b": ["1"]}))


class TestParser:
    def test_csv_semicolon(self, tmp_path):
        path = tmp_path / "batch.csv"
        path.write_text("kind;n;b;k\nhmt;3;2;0,2\nhmt;2;3;1\n", encoding="utf-8")
        batch = load_instances(path)
        assert [row.k for row in batch.rows] == [[0, 2], [1]]
        assert batch.parsing_warnings == []

    def test_csv_comma(self, tmp_path):
        path = tmp_path / "batch.csv"
        path.write_text("kind,n,l\nvsast,4,5\n", encoding="utf-8")
        assert load_instances(path).rows == [InstanceRow(kind="vsast", n=4, l=5)]

    def test_cells_stay_strings(self, tmp_path):
        path = tmp_path / "batch.csv"
        path.write_text("kind;n;c\nvsast;4;-2,-1\n", encoding="utf-8")
        df = parse_file(path)
        assert df.loc[0, "c"] == "-2,-1"

    def test_xlsx(self, tmp_path):
        path = tmp_path / "batch.xlsx"
        pd.DataFrame({"kind": ["triangle"], "n": [5]}).to_excel(path, index=False, engine="openpyxl")
        assert load_instances(path).rows == [InstanceRow(kind="triangle", n=5)]

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileFormatError):
            parse_file(tmp_path / "absent.csv")

    def test_unsupported_format(self, tmp_path):
        path = tmp_path / "batch.txt"
        path.write_text("kind;n\nhmt;1\n", encoding="utf-8")
        with pytest.raises(FileFormatError):
            parse_file(path)

    def test_single_column(self, tmp_path):
        path = tmp_path / "batch.csv"
        path.write_text("kind\nhmt\n", encoding="utf-8")
        with pytest.raises(FileFormatError):
            parse_file(path)

    def test_missing_kind_column(self, tmp_path):
        path = tmp_path / "batch.csv"
        path.write_text("n;b\n3;2\n", encoding="utf-8")
        with pytest.raises(FileFormatError):
            load_instances(path)
