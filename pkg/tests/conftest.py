import pytest

from idiomfix import IdiomDict, IdiomEntry, deserialize, load_table
from idiomfix.data import default_dict_path, default_table_path

# Small hand-built table: controlled readings, homophone sets, tone
# variants (po1..po4), polyphones, and neutral-tone forms.
TINY_TABLE = """\
# test table
日\tri4
出\tchu1
三\tsan1
竿\tgan1
干\tgan1
杆\tgan1
迫\tpo4
不\tbu4
及\tji2
待\tdai4
坡\tpo1
婆\tpo2
叵\tpo3
破\tpo4
世\tshi4
试\tshi4
外\twai4
桃\ttao2
源\tyuan2
中\tzhong1
中\tzhong4
行\txing2
行\thang2
一\tyi1
医\tyi1
衣\tyi1
乙\tyi3
已\tyi3
亿\tyi4
义\tyi4
的\tde
了\tle5
"""

TINY_WORDS = ["日出三竿", "迫不及待", "世外桃源", "试外桃源"]


@pytest.fixture(scope="session")
def tiny_table_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("table") / "tiny.tsv"
    path.write_text(TINY_TABLE, encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def tiny_table(tiny_table_path):
    return load_table(tiny_table_path)


@pytest.fixture(scope="session")
def tiny_dict(tiny_table):
    entries = []
    for word in TINY_WORDS:
        readings = tiny_table.sentence_pinyin(word)
        assert all(s is not None for s in readings)
        entries.append(IdiomEntry(word, tuple(readings)))
    return IdiomDict(entries)


@pytest.fixture(scope="session")
def full_table():
    return load_table(default_table_path())


@pytest.fixture(scope="session")
def full_dict():
    return deserialize(default_dict_path().read_bytes())
