import pytest

from burnside_etale.env import TABLES_FOLDER
from burnside_etale.formats.exceptions import TomFormatError
from burnside_etale.formats.json_tom import read_json_tom, write_json_tom
from burnside_etale.formats.tom_document import TomDocument
from burnside_etale.marks.exceptions import MalformedTableOfMarks
from burnside_etale.pipeline import analyze_tom
from burnside_etale.utils.check_type import WrongTypeException

from tests.golden import C6_MARKS

C6_JSON = '{"name":"C6","order":6,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]],"class_orders":[1,2,3,6]}\n'


def test_write():
    doc = TomDocument(marks=C6_MARKS, name='C6', class_orders=(1, 2, 3, 6))
    assert write_json_tom(doc) == C6_JSON


def test_write_without_metadata():
    assert write_json_tom(TomDocument(marks=C6_MARKS)) == '{"order":6,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]]}\n'


def test_read():
    doc = read_json_tom(C6_JSON)
    assert doc.name == 'C6'
    assert doc.class_orders == (1, 2, 3, 6)
    assert read_json_tom(write_json_tom(doc)) == doc


def test_read_a5_file():
    doc = read_json_tom((TABLES_FOLDER / 'a5.json').read_text())
    assert doc.name == 'A5'
    analysis = analyze_tom(doc)
    assert analysis.name == 'A5'
    assert analysis.invariant.L == (0, 0)


def test_invalid_json_reports_position():
    with pytest.raises(TomFormatError) as e:
        read_json_tom('{"order": 6, "marks": [[6],')
    assert e.value.position is not None


@pytest.mark.parametrize('text, reason', [
    ('{"order":7,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]]}', '`order` is 7'),
    ('{"order":6,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]],"group":"C6"}', 'unknown keys'),
    ('{"order":6}', 'missing keys'),
    ('{"order":6,"marks":[]}', 'must start with'),
    ('{"order":6,"marks":[[]]}', 'must start with'),
])
def test_document_errors(text, reason):
    with pytest.raises(TomFormatError) as e:
        read_json_tom(text)
    assert reason in e.value.reason


@pytest.mark.parametrize('text', [
    '[[6],[3,3],[2,0,2],[1,1,1,1]]',
    '{"order":"6","marks":[[6],[3,3],[2,0,2],[1,1,1,1]]}',
    '{"order":true,"marks":[[1]]}',
    '{"order":6,"marks":[[6],[3,"3"],[2,0,2],[1,1,1,1]]}',
    '{"name":6,"order":6,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]]}',
    '{"order":6,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]],"class_orders":[1,2,3,6.0]}',
])
def test_wrong_types(text):
    with pytest.raises(WrongTypeException):
        read_json_tom(text)


@pytest.mark.parametrize('text', [
    '{"order":6,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]],"class_orders":[1,2,3,5]}',
    '{"order":6,"marks":[[6],[3,3],[2,0,2],[1,1,1,1]],"class_orders":[1,2,6]}',
    '{"order":6,"marks":[[6],[3,3],[2,0,3],[1,1,1,1]]}',
])
def test_malformed_tables(text):
    with pytest.raises(MalformedTableOfMarks):
        read_json_tom(text)
