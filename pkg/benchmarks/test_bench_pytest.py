"""
Pytest-benchmark tests for the workbench oracles.

These tests use pytest-benchmark to track the cost of exhaustive distance
enumeration, expansion and the table drivers across runs.
"""

from aqecc_workbench.css import CssPair, derive, expand_aqecc
from aqecc_workbench.families import bch, grm, qr
from aqecc_workbench.field import make_field, prime_basis
from aqecc_workbench.lincode import dual, min_distance
from aqecc_workbench.settings import Settings
from aqecc_workbench.symplectic import css_to_additive, stabilizer_params
from aqecc_workbench.tables import TableCaps, table_rows


class TestOracleBenchmarks:
    """Benchmarks for the exhaustive oracles."""

    def test_min_distance_reed_muller(self, benchmark):
        """Benchmark d of R_2(2, 5) = [32,16,8]."""
        code, _ = grm(2, 5, 2)

        def run():
            code._distance = None
            return min_distance(code)

        result = benchmark(run)
        assert result.value == 8

    def test_min_distance_threaded(self, benchmark):
        """Same enumeration spread over four workers."""
        code, _ = grm(2, 5, 2)
        settings = Settings(threads=4)

        def run():
            code._distance = None
            return min_distance(code, settings=settings)

        result = benchmark(run)
        assert result.value == 8

    def test_min_distance_bch(self, benchmark):
        """Benchmark d of the [15,7,5] BCH code."""
        code, _ = bch(2, 15, 1, 5)

        def run():
            code._distance = None
            return min_distance(code)

        assert benchmark(run).value == 5

    def test_derive_gf4(self, benchmark):
        """Benchmark CSS derivation of the [[5,1]]_4 QR pair."""
        spec = qr(5, 4)
        pair = CssPair(spec.residue, spec.residue_even)
        params = benchmark(derive, pair)
        assert params.dz.value == 3


class TestConstructionBenchmarks:
    """Benchmarks for constructions and table drivers."""

    def test_expand_grm_pair(self, benchmark):
        """Expand R_4(1, 2) < R_4(2, 2) over GF(2)."""
        outer, _ = grm(4, 2, 2)
        inner, _ = grm(4, 2, 1)
        pair = CssPair(outer, inner)
        basis = prime_basis(make_field(2, 2))
        derivation = benchmark(expand_aqecc, pair, basis)
        assert derivation.pair.n == 32

    def test_stabilizer_params_steane(self, benchmark):
        """Benchmark the symplectic oracle on the binary QR(7) code."""
        spec = qr(7, 2)
        code = css_to_additive(CssPair(spec.residue, dual(spec.residue)))
        params = benchmark(stabilizer_params, code)
        assert params.k == 1

    def test_grm_table(self, benchmark):
        """Benchmark the binary GRM table up to m = 3."""
        rows = benchmark(table_rows, "grm", TableCaps(q=2, max_m=3))
        assert rows
