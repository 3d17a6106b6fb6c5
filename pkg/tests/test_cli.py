"""
Tests for the btlab command line
"""

import io
import math
from pathlib import Path

import orjson
import pytest

from btlab.cli import build_parser, run

SCHEMA = Path(__file__).resolve().parents[1] / 'schemas' / 'cli-output.schema.json'


def invoke(*argv: str) -> tuple[int, str]:
    """Helper to run the CLI and capture stdout"""
    stdout = io.StringIO()
    code = run(list(argv), stdout=stdout)
    return code, stdout.getvalue()


def invoke_json(*argv: str) -> tuple[int, dict]:
    code, text = invoke(*argv)
    return code, orjson.loads(text)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    """Keep BTLAB_* variables and a stray .env out of the defaults"""
    monkeypatch.chdir(tmp_path)
    for name in ('BTLAB_THREADS', 'BTLAB_SEED', 'BTLAB_PAIR_DEPTH', 'BTLAB_LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)


class TestParser:
    """Tests for argument parsing"""

    def test_global_flags_on_either_side(self):
        parser = build_parser()
        before = parser.parse_args(['--format', 'csv', '--seed', '3', 'table1'])
        after = parser.parse_args(['table1', '--format', 'csv', '--seed', '3'])
        assert before.format == after.format == 'csv'
        assert before.seed == after.seed == 3

    def test_unknown_flag(self):
        code, text = invoke('exppairs', '--bogus')
        assert code == 2
        assert text == ''

    def test_bad_rational(self):
        assert invoke('constants', '--varpi', 'two-thirds')[0] == 2

    def test_quiet_and_verbose_exclusive(self):
        assert invoke('-q', '-v', 'table1')[0] == 2

    def test_help(self, capsys):
        assert invoke('--help')[0] == 0
        assert 'exppairs' in capsys.readouterr().out


class TestExppairs:
    """Tests for `btlab exppairs`"""

    def test_min_sum_depth_six(self):
        code, output = invoke_json('exppairs', '--depth', '6')
        assert code == 0
        assert output['command'] == 'exppairs'
        assert output['status'] == 'passed'
        assert output['seed'] is None
        assert output['data']['word'] == 'ABAAAB'
        assert output['data']['value'] == '34/41'
        assert (output['data']['kappa'], output['data']['lam']) == ('11/82', '57/82')

    def test_max_g(self):
        _, output = invoke_json('exppairs', '--optimize', 'max-g', '--varpi', '2/3', '--depth', '2')
        assert output['data']['word'] == 'AB'
        assert output['data']['value'] == '13/18'

    def test_word_csv(self):
        code, text = invoke('exppairs', '--word', 'AB', '--format', 'csv')
        assert code == 0
        assert text == 'word,kappa,lam,nu,value,value_float\nAB,1/6,2/3,1/6,,\n'

    def test_akb(self):
        code, output = invoke_json('exppairs', '--akb', '3')
        assert code == 0
        closed, composed = output['data']
        assert composed['word'] == 'AAB'
        assert (closed['kappa'], closed['lam'], closed['nu']) == (composed['kappa'], composed['lam'], composed['nu'])

    def test_bad_word(self):
        assert invoke('exppairs', '--word', 'ABC')[0] == 2


class TestConstants:
    """Tests for `btlab constants`, `table1` and `figures`"""

    def test_unconditional_two_thirds(self):
        code, output = invoke_json('constants', '--varpi', '2/3')
        assert code == 0
        assert output['status'] == 'report'
        assert output['data']['best'] == ['friedlander-iwaniec']
        values = {entry['curve_id']: entry['value'] for entry in output['data']['admissible']}
        assert values['van-lint-richert'] == '6'

    def test_table_format_has_title(self):
        code, text = invoke('constants', '--varpi', '1/10', '--format', 'table')
        assert code == 0
        lines = text.splitlines()
        assert lines[0] == 'varpi = 1/10; best = maynard (2)'
        assert set(lines[2].replace(' ', '')) == {'-'}

    def test_missing_varpi(self):
        assert invoke('constants')[0] == 2

    def test_small_theta_needs_assumption(self):
        assert invoke('constants', '--varpi', '0.46', '--theta', '0')[0] == 2
        code, output = invoke_json('constants', '--varpi', '0.46', '--theta', '0', '--assume', 'prime')
        assert code == 0
        assert 'burgess-like[theta=0]' in {entry['curve_id'] for entry in output['data']['admissible']}

    def test_lindelof_alias(self):
        code, output = invoke_json('constants', '--varpi', '1/4', '--assume', 'lh')
        assert code == 0
        assert output['data']['best'] == ['motohashi-lindelof']
        assert output['data']['best_value'] == '2'

    def test_table1_passes(self):
        code, output = invoke_json('table1')
        assert code == 0
        assert output['status'] == 'passed'
        assert [row['varpi'] for row in output['data']] == ['16/31', '12/23', '32/61', '8/15', '7/13', '6/11']

    def test_figures_csv(self):
        code, text = invoke('figures', '--min', '1/2', '--max', '51/100', '--step', '1/100', '--format', 'csv')
        assert code == 0
        assert text.splitlines()[0] == 'varpi,curve_id,value'
        assert text.splitlines()[-1].startswith('0.5,ENVELOPE,')

    def test_sieve_fns_at(self):
        code, output = invoke_json('sieve-fns', '--s-max', '3', '--step', '0.01', '--at', '2')
        assert code == 0
        assert float(output['data'][0]['F']) == pytest.approx(math.exp(0.5772156649015329), abs=1e-6)


class TestSeededCommands:
    """Tests for `btlab sums` and `btlab verify-bt`"""

    def test_sums_reproducible(self):
        first = invoke('sums', '--experiment', 'crt', '--cases', '5', '--seed', '1')
        second = invoke('sums', '--experiment', 'crt', '--cases', '5', '--seed', '1')
        assert first == second
        output = orjson.loads(first[1])
        assert first[0] == 0
        assert output['seed'] == 1
        assert output['data']['overall_status'] == 'passed'
        assert [report['name'] for report in output['data']['reports']] == ['crt']

    def test_scan_csv(self):
        code, text = invoke('sums', '--experiment', 'incomplete-kloosterman', '--cases', '4', '--format', 'csv')
        lines = text.splitlines()
        assert code == 0
        assert lines[0] == 'q,h,interval_start,interval_len,abs_sum,rstar_ratio,smooth_ratio'
        assert len(lines) == 5

    def test_verify_bt_rows(self):
        code, text = invoke('verify-bt', '--x', '1000', '--q-max', '20', '--format', 'csv')
        lines = text.splitlines()
        assert code == 0
        assert lines[0] == 'x,q,max_a,max_count,mv_bound,ratio'
        assert len(lines) == 1 + 19

    def test_verify_bt_residues(self):
        code, text = invoke('verify-bt', '--x', '1000', '--q-max', '10', '--q', '4', '--residues', '--format', 'csv')
        assert code == 0
        assert text == 'x,q,a,count\n1000,4,1,80\n1000,4,3,87\n'

    def test_residues_need_q(self):
        assert invoke('verify-bt', '--x', '1000', '--residues')[0] == 2

    def test_small_x_rejected(self):
        assert invoke('verify-bt', '--x', '50')[0] == 2


class TestOutputSchema:
    """Tests for the JSON envelope"""

    def test_keys_match_schema(self):
        schema = orjson.loads(SCHEMA.read_bytes())
        _, output = invoke_json('exppairs', '--word', 'A2B')
        assert set(schema['required']) <= set(output)
        assert set(output) <= set(schema['properties'])
        assert output['command'] in schema['properties']['command']['enum']

    def test_invalid_config(self, monkeypatch):
        monkeypatch.setenv('BTLAB_THREADS', '0')
        assert invoke('table1')[0] == 2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
