"""Tests for the command line front end."""

import csv
import io
import json
import re

import pytest

from mdbs import cli, gamma, seqkit

FINAL_CYCLE = '1,2,11,9,13,5,10,4,7,14,3,6,12,8,15'
DE_BRUIJN_16 = '0000100110101111'
MODIFIED_15 = '000100110101111'

TABLE2_GENERATORS = {
    '10100100011', '11011000101', '10011010111', '10100011011',
    '11101011001', '11010111011', '10001101011', '11011101011',
    '11010110001', '11000100101',
}


def _rows(out):
    return list(csv.reader(io.StringIO(out)))


def test_usage_errors_exit_2(capsys):
    assert cli.main([]) == 2
    assert cli.main(['bogus']) == 2
    assert cli.main(['graph']) == 2
    assert cli.main(['tables', '--n', '4', '--which', '9']) == 2
    assert cli.main(['graph', '--n', '4', '--highlight', 'a,b']) == 2
    capsys.readouterr()
    assert cli.main(['greedy', '--n', '4']) == 2
    assert 'greedy needs' in capsys.readouterr().err
    assert cli.main(['minpoly', '--n', '4']) == 2
    assert cli.main(['minpoly', '--n', '4', '--cycle', '1,2',
                     '--sequence', '111']) == 2
    assert cli.main(['verify', '--n', '4']) == 2


def test_help_exits_cleanly(capsys):
    assert cli.main(['--help']) == 0
    assert 'usage' in capsys.readouterr().out


def test_graph_dot_output(capsys):
    assert cli.main(['graph', '--n', '3']) == 0
    out = capsys.readouterr().out
    assert out.startswith('digraph gamma_3 {\n')
    assert out.endswith('}\n')
    assert '  1 -> 2 [label="0", color="blue"];' in out
    assert '  1 -> 5 [label="1", color="red"];' in out
    assert '  4 -> 7 [label="1", color="red"];' in out
    assert '4 -> 0' not in out


def test_graph_highlight_bolds_cycle_arcs(capsys):
    assert cli.main(['graph', '--n', '4', '--highlight', FINAL_CYCLE]) == 0
    out = capsys.readouterr().out
    assert out.count('style="bold"') == 15


def test_greedy_text_single_walk(capsys):
    assert cli.main(['greedy', '--n', '4', '--v-init', '1']) == 0
    captured = capsys.readouterr()
    assert captured.out == '1,13,5,10,11,9,2,4,7,14,3,6,12,8,15\n'
    assert captured.err == ''


def test_greedy_text_reports_failed_walk(capsys):
    assert cli.main(['greedy', '--n', '4', '--v-init', '2']) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith('2,')
    assert 'not hamiltonian' in captured.err


def test_greedy_all_jsonl(capsys):
    assert cli.main(['greedy', '--n', '4', '--all']) == 0
    records = [json.loads(line)
               for line in capsys.readouterr().out.splitlines()]
    assert [r['v_init'] for r in records] == list(range(1, 16))
    winners = {r['v_init'] for r in records if r['hamiltonian']}
    assert winners == {1, 3, 7, 8, 12, 14, 15}


def test_greedy_jsonl_single_walk(capsys):
    assert cli.main(['greedy', '--n', '4', '--v-init', '5',
                     '--alg', 'double', '--format', 'jsonl']) == 0
    record = json.loads(capsys.readouterr().out)
    assert record['alg'] == 'double'
    assert record['hamiltonian'] is True
    assert record['vertices'] == [5, 10, 4, 8, 15, 14, 12, 7, 1, 2, 11,
                                  6, 3, 9, 13]
    cycle = gamma.HamCycle(record['vertices'], 4)
    assert record['sequence'] == gamma.cycle_to_sequence(cycle).to_text()


def test_decompose_jsonl_default(capsys):
    assert cli.main(['decompose', '--n', '4', '--order', '6,4,14']) == 0
    record = json.loads(capsys.readouterr().out)
    assert record == {'n': 4,
                      'cycles': [[6, 3, 9, 13, 5, 10, 11],
                                 [4, 7, 1, 2],
                                 [14, 12, 8, 15]],
                      'order_seed': None}


def test_decompose_text_format(capsys):
    assert cli.main(['decompose', '--n', '4', '--order', '6,4,14',
                     '--format', 'text']) == 0
    assert capsys.readouterr().out.splitlines() == [
        '(6,3,9,13,5,10,11)', '(4,7,1,2)', '(14,12,8,15)']


def test_decompose_seeded_runs_are_byte_identical(capsys):
    argv = ['decompose', '--n', '5', '--seed', 'trial-7']
    assert cli.main(argv) == 0
    first = capsys.readouterr().out
    assert cli.main(argv) == 0
    assert capsys.readouterr().out == first
    record = json.loads(first)
    assert record['order_seed'] == 'trial-7'
    flat = [v for c in record['cycles'] for v in c]
    assert sorted(flat) == list(range(1, 32))


def test_join_worked_decomposition_jsonl(capsys):
    assert cli.main(['join', '--n', '4', '--order', '6,4,14']) == 0
    lines = capsys.readouterr().out.splitlines()
    head = json.loads(lines[0])
    assert head['best_count'] == 8
    assert head['edges'] == [[1, 2, 13, 2], [1, 2, 11, 4], [1, 3, 3, 12],
                             [2, 3, 7, 8], [2, 3, 1, 14]]
    trees = [json.loads(line) for line in lines[1:-1]]
    assert len(trees) == 8
    by_pairs = {frozenset(tuple(p) for p in t['tree_edges']): t
                for t in trees}
    pick = by_pairs[frozenset({(11, 4), (7, 8)})]
    assert pick['vertices'] == [6, 3, 9, 13, 5, 10, 4, 8, 15, 14, 12, 7,
                                1, 2, 11]
    assert pick['min_poly'] == 'x^4+x+1'
    assert json.loads(lines[-1]) == {'distinct_joined_cycles': 8}


def test_join_text_format(capsys):
    assert cli.main(['join', '--n', '4', '--order', '6,4,14',
                     '--format', 'text']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'cycles: 3  edges: 5  spanning trees: 8'
    assert lines[-1] == 'distinct joined cycles: 8'
    assert len(lines) == 10
    assert all(' -> ' in line and 'minpoly=' in line
               for line in lines[1:-1])


def test_join_limit_caps_rows_not_count(capsys):
    assert cli.main(['join', '--n', '4', '--order', '6,4,14',
                     '--limit', '2']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert json.loads(lines[-1]) == {'distinct_joined_cycles': 8}


def test_join_single_cycle_identity(capsys):
    assert cli.main(['join', '--n', '4']) == 0
    lines = capsys.readouterr().out.splitlines()
    head = json.loads(lines[0])
    assert len(head['cycles']) == 1
    assert head['edges'] == []
    assert head['best_count'] == 1
    tree = json.loads(lines[1])
    assert tree['tree_edges'] == []
    assert tree['vertices'] == head['cycles'][0]
    assert json.loads(lines[-1]) == {'distinct_joined_cycles': 1}


def test_enumerate_jsonl_records(capsys):
    assert cli.main(['enumerate', '--n', '4', '--limit', '3']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    for line in lines:
        record = json.loads(line)
        assert set(record) == {'n', 'vertices', 'sequence', 'c_h', 'd',
                               'f', 'f_star', 'span', 'bm_check'}
        assert record['n'] == 4
        assert record['vertices'][0] == 15
        assert record['span'] in {4, 12, 14}
        assert seqkit.is_modified_de_bruijn(
            seqkit.parse_sequence(record['sequence']), 4)


def test_enumerate_guard_refusal(capsys, monkeypatch):
    monkeypatch.delenv(gamma.EXHAUSTIVE_MAX_ENV, raising=False)
    assert cli.main(['enumerate', '--n', '7']) == 3
    assert capsys.readouterr().err.startswith('refused:')


def test_enumerate_guard_override_and_env(capsys, monkeypatch):
    monkeypatch.delenv(gamma.EXHAUSTIVE_MAX_ENV, raising=False)
    assert cli.main(['enumerate', '--n', '7', '--limit', '1',
                     '--override-guard']) == 0
    record = json.loads(capsys.readouterr().out)
    assert len(record['vertices']) == 127
    monkeypatch.setenv(gamma.EXHAUSTIVE_MAX_ENV, '3')
    assert cli.main(['enumerate', '--n', '4']) == 3
    assert capsys.readouterr().err.startswith('refused:')


def test_minpoly_text_report(capsys):
    assert cli.main(['minpoly', '--n', '4', '--cycle', FINAL_CYCLE]) == 0
    assert capsys.readouterr().out.splitlines() == [
        'c_h = x^10+x^7+x^5+x+1',
        'd = x^2+x+1',
        'f = x^12+x^9+x^6+x^3+1',
        'f_star = x^12+x^9+x^6+x^3+1',
        'span = 12',
        'bm_check = x^12+x^9+x^6+x^3+1',
    ]


def test_minpoly_reads_cycle_from_stdin(capsys, monkeypatch):
    assert cli.main(['minpoly', '--n', '4', '--cycle', FINAL_CYCLE]) == 0
    direct = capsys.readouterr().out
    monkeypatch.setattr('sys.stdin', io.StringIO(FINAL_CYCLE + '\n'))
    assert cli.main(['minpoly', '--n', '4', '--cycle', '-']) == 0
    assert capsys.readouterr().out == direct


def test_minpoly_sequence_jsonl(capsys):
    assert cli.main(['minpoly', '--sequence', MODIFIED_15,
                     '--format', 'jsonl']) == 0
    record = json.loads(capsys.readouterr().out)
    assert record['n'] == 4
    assert record['sequence'] == MODIFIED_15
    assert record['vertices'][0] == 5
    assert record['c_h'] == record['d'] == 'x^10+x^9+x^8+x^6+x^5+x^2+1'
    assert record['f'] == record['bm_check'] == 'x^4+x+1'
    assert record['f_star'] == 'x^4+x^3+1'
    assert record['span'] == 4


def test_minpoly_rejects_bad_input(capsys):
    assert cli.main(['minpoly', '--n', '4', '--cycle', '1,2,three']) == 4
    assert 'error:' in capsys.readouterr().err
    assert cli.main(['minpoly', '--n', '4', '--cycle', '1,2,3']) == 4
    capsys.readouterr()
    assert cli.main(['minpoly', '--n', '5', '--cycle', FINAL_CYCLE]) == 4
    assert 'error:' in capsys.readouterr().err
    assert cli.main(['minpoly', '--n', '5', '--sequence', MODIFIED_15]) == 4
    assert 'error:' in capsys.readouterr().err


def test_verify_cycle_ok(capsys):
    assert cli.main(['verify', '--cycle', FINAL_CYCLE]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert 'n = 4' in lines
    assert 'span = 12' in lines
    assert 'bm_matches = True' in lines
    assert 'ok = True' in lines


def test_verify_cycle_rejects_non_cycle(capsys):
    assert cli.main(['verify', '--cycle', '1,3,2']) == 4
    assert 'verification failed' in capsys.readouterr().err
    assert cli.main(['verify', '--cycle', '1,2,11,9,13,5,10,4,7,14,3,6,12,8'])\
        == 4


def test_verify_sequence_de_bruijn(capsys):
    assert cli.main(['verify', '--sequence', DE_BRUIJN_16]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert 'n = 4' in lines
    assert 'de_bruijn = True' in lines
    assert 'modified_de_bruijn = False' in lines
    assert 'linear_complexity = 15' in lines
    assert 'span_form = True' in lines
    assert 'ok = True' in lines


def test_verify_sequence_modified_jsonl(capsys):
    assert cli.main(['verify', '--sequence', '(0,0,0,1,0,0,1,1,0,1,0,1,1,1,1)',
                     '--format', 'jsonl']) == 0
    record = json.loads(capsys.readouterr().out)
    assert record['modified_de_bruijn'] is True
    assert record['linear_complexity'] == 4
    assert record['minimal_polynomial'] == 'x^4+x+1'
    assert record['span_form'] is None
    assert record['ok'] is True


def test_verify_sequence_failures(capsys):
    assert cli.main(['verify', '--sequence', '01x1']) == 2
    assert cli.main(['verify', '--sequence', '10100']) == 2
    capsys.readouterr()
    assert cli.main(['verify', '--sequence', '111']) == 4
    assert cli.main(['verify', '--sequence', '10100', '--n', '3']) == 4


def test_tables_span_support(capsys):
    assert cli.main(['tables', '--n', '4', '--which', '1']) == 0
    assert capsys.readouterr().out == '4,12,14\n'


def test_tables_max_span_generators(capsys):
    assert cli.main(['tables', '--n', '4', '--which', '2']) == 0
    rows = _rows(capsys.readouterr().out)
    assert len(rows) == 10
    assert rows == sorted(rows)
    assert {g for g, _ in rows} == TABLE2_GENERATORS
    for _, sequence in rows:
        assert seqkit.is_modified_de_bruijn(
            seqkit.parse_sequence(sequence), 4)


def test_tables_greedy_walks(capsys):
    assert cli.main(['tables', '--n', '4', '--which', '3']) == 0
    rows = _rows(capsys.readouterr().out)
    assert rows == [
        ['complement', '1 8 15', '1 13 5 10 11 9 2 4 7 14 3 6 12 8 15'],
        ['complement', '3 14', '3 9 13 5 10 11 6 12 7 1 2 4 8 15 14'],
        ['complement', '7 12', '7 1 13 5 10 11 9 2 4 8 15 14 3 6 12'],
        ['double', '5 10', '5 10 4 8 15 14 12 7 1 2 11 6 3 9 13'],
    ]


def test_tables_joined_cycles(capsys):
    assert cli.main(['tables', '--n', '4', '--which', '4']) == 0
    rows = _rows(capsys.readouterr().out)
    assert rows[-1] == ['distinct', '8']
    trees = rows[:-1]
    assert len(trees) == 8
    by_pairs = {frozenset((int(r), int(s)) for r, s
                          in re.findall(r'\((\d+),(\d+)\)', row[0])): row
                for row in trees}
    pick = by_pairs[frozenset({(11, 4), (7, 8)})]
    assert pick[1] == '6 3 9 13 5 10 4 8 15 14 12 7 1 2 11'
    assert pick[3] == 'x^4+x+1'
    assert cli.main(['tables', '--n', '5', '--which', '4']) == 2


def test_tables_guard_refusal(capsys, monkeypatch):
    monkeypatch.delenv(gamma.EXHAUSTIVE_MAX_ENV, raising=False)
    assert cli.main(['tables', '--n', '7', '--which', '1']) == 3
    assert capsys.readouterr().err.startswith('refused:')


def test_run_accepts_config_directly(capsys):
    config = cli.RunConfig(command='tables', n=4, which=1)
    assert cli.run(config) == 0
    assert capsys.readouterr().out == '4,12,14\n'


def test_identical_configs_are_byte_identical(capsys):
    for argv in (['join', '--n', '4', '--order', '6,4,14'],
                 ['enumerate', '--n', '4', '--limit', '5'],
                 ['tables', '--n', '4', '--which', '2']):
        assert cli.main(argv) == 0
        first = capsys.readouterr().out
        assert cli.main(argv) == 0
        assert capsys.readouterr().out == first
        assert first
