import json

from burnside_etale.formats.emit import EmitMode, emit_result


def test_human(c6):
    assert emit_result(c6.invariant) == 'L = [1]\ncomponents = [[1,2,3,4]]\nchi = 0\n'


def test_human_a5(a5):
    assert emit_result(a5.invariant, 'human') == 'L = [0,0]\ncomponents = [[1,2,3,4,5,6,7,8],[9]]\nchi = 2\n'


def test_human_trace(s3):
    lines = emit_result(s3.invariant, EmitMode.HUMAN, trace=True).splitlines()
    assert lines[3] == 'trace:'
    assert len(lines) == 4 + 4
    assert lines[4].startswith('  1. c=4 initialize:')
    assert lines[6].startswith('  3. c=2 isolated: diag=1 P=[]')
    assert lines[7].endswith('L=[0] C=[[1,2,3,4]] chi 2->1')


def test_json(a5):
    text = emit_result(a5.invariant, EmitMode.JSON)
    assert text == '{"L":[0,0],"components":[[1,2,3,4,5,6,7,8],[9]],"chi":2}\n'


def test_json_trace(c6):
    data = json.loads(emit_result(c6.invariant, 'json', trace=True))
    assert [step['kind'] for step in data['trace']] == ['initialize', 'glued', 'glued', 'glued']
    last = data['trace'][-1]
    assert last['P'] == [2, 3]
    assert last['Ep'] == {'2': [1, 2], '3': [1, 3]}
    assert last['I'] == [[2, 3, 4]]
    assert last['N'] == 1
    assert last['L'] == [1]
    assert (last['chi_before'], last['chi_after']) == (1, 0)
