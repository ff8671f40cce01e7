from burnside_etale.env import VERBOSE
from burnside_etale.utils.print_to_file import print_and_log, print_and_log_progress, console_log_file_context


def test_print_and_log_mirrors_plain_text_to_file(tmp_path, capsys):
    log_file = tmp_path / 'console.log'
    with console_log_file_context(log_file):
        print_and_log('L = [0,0]', color='\033[32m')
    assert capsys.readouterr().out == 'L = [0,0]\n'
    assert log_file.read_text() == 'L = [0,0]\n'


def test_progress_only_when_verbose(capsys):
    print_and_log_progress('enumerating')
    assert capsys.readouterr().err == ''
    with VERBOSE.temporary_set(True):
        print_and_log_progress('enumerating')
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'enumerating' in captured.err
