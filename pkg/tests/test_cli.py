# -*- coding: utf-8 -*-
# +---------------------------------------------------------------------------+
# |  Copyright (c) 2026 Quasicox Developers                                   |
# |                                                                           |
# |  This file is part of Quasicox.                                           |
# |                                                                           |
# |  Quasicox is free software: you can redistribute it and/or modify         |
# |  it under the terms of the GNU General Public License as published by     |
# |  the Free Software Foundation, either version 3 of the License, or        |
# |  (at your option) any later version.                                      |
# |                                                                           |
# |  Quasicox is distributed in the hope that it will be useful,              |
# |  but WITHOUT ANY WARRANTY; without even the implied warranty of           |
# |  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            |
# |  GNU General Public License for more details.                             |
# |                                                                           |
# |  You should have received a copy of the GNU General Public License        |
# |  along with Quasicox.  If not, see <https://www.gnu.org/licenses/>.       |
# +---------------------------------------------------------------------------+

import io
import json

import pytest

from quasicox.command import COMMANDS, build_parser, main
from quasicox.command.job import JobSpec, parse_range
from quasicox.extension.version import tool_version
from quasicox.model.abelian import AbelianInvariants
from quasicox.model.errors import UsageError


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


def test_registered_commands():
    assert list(COMMANDS) == ['present', 'isomap', 'rho', 'rs', 'abelianize', 'low-index',
                              'reproduce', 'verify-maps']


def test_documents_carry_headers():
    code, doc = run_json('present', '--diagram', 'dn', '--n', '5')
    assert code == 0
    assert doc['tool_version'] == tool_version()
    assert doc['command'] == 'present'
    assert doc['params']['n'] == 5
    assert doc['presentation']['name'] == "A(D_5)"
    assert doc['diagram']['edges'] == [[1, 3], [2, 3], [3, 4], [4, 5]]


def test_present_twisted_quotient():
    code, doc = run_json('present', '--diagram', 'ngon', '--n', '6', '--quotient', 'twisted', '--t', '2')
    assert code == 0
    assert doc['presentation']['relator_labels'] == ['tc_2']
    assert len(doc['presentation']['relations']) == 15


def test_present_gap():
    code, text = run('present', '--diagram', 'delta', '--n', '7', '--t', '2', '--format', 'gap')
    assert code == 0
    assert text.startswith("# A(Delta_{2,7})")
    assert 'FreeGroup("b1", "b2", "b3", "b4", "b5", "b6", "c7")' in text


def test_present_text_with_coxeter_orders():
    code, text = run('present', '--diagram', 'path', '--n', '3', '--coxeter', '--format', 'text')
    assert code == 0
    assert "O(y1): y1^2 = 1" in text


@pytest.mark.parametrize('argv', [
    ['present', '--diagram', 'dn', '--n', '3'],
    ['present', '--diagram', 'delta', '--n', '6'],
    ['present', '--diagram', 'delta', '--n', '6', '--t', '4'],
    ['present', '--diagram', 'dn', '--n', '5', '--quotient', 'cycle'],
    ['isomap', '--pair', 'prop33', '--n', '6', '--t', '5'],
    ['reproduce', '--n-range', '5..99'],
    ['reproduce', '--n-range', '7..5'],
    ['low-index', '--max-index', '40'],
    ['low-index', '--n', '4', '--t', '1'],
    ['abelianize', '--n', '5', '--quotient', 'cycle', '--t', '2'],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "quasicox:" in capsys.readouterr().err


def test_unknown_command_is_rejected():
    with pytest.raises(SystemExit):
        build_parser().parse_args(['frobnicate'])


def test_isomap():
    code, doc = run_json('isomap', '--pair', 'prop31', '--n', '5')
    assert code == 0
    assert doc['passed']
    assert [m['name'] for m in doc['maps']] == ['prop31.fwd', 'prop31.bwd']
    assert doc['maps'][0]['images']['a1'] == 'x1'


def test_isomap_single_direction():
    code, doc = run_json('isomap', '--pair', 'thm11', '--n', '6', '--t', '2', '--direction', 'bwd')
    assert code == 0
    assert [m['name'] for m in doc['maps']] == ['thm11.bwd']
    assert {c['check'] for c in doc['checks']} == {'relations'}


def test_isomap_corrupt_fails():
    code, doc = run_json('isomap', '--pair', 'prop31', '--n', '5', '--corrupt')
    assert code == 1
    assert not doc['passed']
    failed = [c for c in doc['checks'] if not c['passed']]
    assert any(':' in f for c in failed for f in c['failures'])


def test_rho():
    code, doc = run_json('rho', '--n', '6', '--k', '1', '--l', '4', '--m', '6')
    assert code == 0
    assert doc['row'] == 'k=1,l<m=n'
    assert doc['word'] == 'y6*y7^-1'
    assert doc['target'] == [4, 6]
    assert doc['passed']


def test_rho_out_of_range(capsys):
    code, _ = run('rho', '--n', '6', '--k', '4', '--l', '2', '--m', '1')
    assert code == 2


def test_rs():
    code, doc = run_json('rs', '--n', '5', '--quotient', 'cycle')
    assert code == 0
    assert doc['cosets'] == 10
    assert doc['empty_s2']
    assert [g['name'] for g in doc['generators']] == ['y1', 'y2', 'y3', 'y4', 'y5', 'y6']
    assert doc['presentation']['generators'] == ['y1', 'y2', 'y3', 'y4', 'y5', 'y6']


def test_rs_gap_for_point_subgroup():
    code, text = run('rs', '--n', '4', '--subgroup', 'point', '--format', 'gap')
    assert code == 0
    assert text.startswith("# A(Delta_4)|stabilizer of 1")


@pytest.mark.parametrize('argv,free_rank,torsion', [
    (['--n', '5'], 4, []),
    (['--n', '5', '--quotient', 'cycle'], 3, [2]),
    (['--n', '6', '--t', '2'], 2, [2, 4]),
    (['--n', '6', '--t', '4'], 3, [2]),
    (['--n', '6', '--t', '1', '--subgroup', 'point'], 2, [2]),
])
def test_abelianize(argv, free_rank, torsion):
    code, doc = run_json('abelianize', *argv)
    assert code == 0
    assert (doc['free_rank'], doc['torsion']) == (free_rank, torsion)
    assert doc['match']


def test_abelianize_whole_group():
    code, doc = run_json('abelianize', '--n', '5', '--whole')
    assert code == 0
    assert doc['primary'] == "Z"
    assert 'match' not in doc


def test_abelianize_mismatch_fails(monkeypatch):
    monkeypatch.setattr('quasicox.command.subgroup.expected_for',
                        lambda t, subgroup='pair', n=None: AbelianInvariants(5))
    code, doc = run_json('abelianize', '--n', '5', '--quotient', 'cycle')
    assert code == 1
    assert doc['match'] is False
    assert doc['expected'] == {'free_rank': 5, 'torsion': []}


def test_low_index():
    code, doc = run_json('low-index', '--n', '4', '--quotient', 'twisted', '--max-index', '2')
    assert code == 0
    assert doc['group'] == "G_1(n=4)"
    assert [c['index'] for c in doc['counts']] == [1, 2]
    assert doc['counts'][0]['classes'] == 1


def test_low_index_twisted_default_leaves_the_job_alone():
    job = JobSpec(command='low-index', n=4, quotient='twisted', options={'max_index': 2})
    out = io.StringIO()
    assert COMMANDS['low-index'].run(job, out) == 0
    assert job.t is None
    doc = json.loads(out.getvalue())
    assert doc['group'] == "G_1(n=4)"
    assert 't' not in doc['params']


def test_reproduce_tsv():
    code, text = run('reproduce', '--n-range', '5..6', '--format', 'tsv')
    assert code == 0
    lines = text.splitlines()
    assert lines[0].split('\t') == ['n', 'group', 't', 'free_rank', 'torsion', 'primary', 'expected', 'match']
    assert len(lines) == 1 + (1 + 4) + (1 + 5)
    assert all(line.endswith('True') for line in lines[1:])


def test_reproduce_point_json():
    code, doc = run_json('--threads', '2', 'reproduce', '--n-range', '5..5', '--subgroup', 'point')
    assert code == 0
    assert doc['passed']
    assert [r['group'] for r in doc['rows']] == ['H_0', 'H_1', 'H_2', 'H_3']
    assert doc['summary'] == [{'n': 5, 'passed': True}]


def test_verify_maps():
    code, doc = run_json('verify-maps', '--n-range', '5..5', '--lemmas')
    assert code == 0
    assert doc['passed']
    assert {r['pair'] for r in doc['maps']} == {'prop31', 'prop32', 'prop33', 'thm11', 'inversion'}
    assert [r['t'] for r in doc['rotations']] == [1, 2]
    assert doc['lemmas'][0]['n'] == 5


def test_verify_maps_corrupt():
    code, doc = run_json('verify-maps', '--n-range', '4..5', '--pairs', 'prop31', '--corrupt')
    assert code == 1
    assert not doc['passed']


def test_verify_maps_unknown_pair():
    code, _ = run('verify-maps', '--pairs', 'prop31,prop99')
    assert code == 2


def test_parse_range():
    assert parse_range("5..12") == (5, 12)
    assert parse_range(" 4 - 6 ") == (4, 6)
    with pytest.raises(UsageError):
        parse_range("5..")


def test_job_group_selection():
    job = JobSpec('rs', n=6, t=2)
    assert job.group_key() == 2
    assert job.group().name == "G_2(n=6)"
    assert JobSpec('rs', n=6, quotient='cycle').group_key() == 0
    assert JobSpec('rs', n=6).group_key() is None
    with pytest.raises(UsageError):
        JobSpec('rs', n=6, t=9).group_key()
