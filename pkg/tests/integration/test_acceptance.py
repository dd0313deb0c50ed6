"""The shipped acceptance suite, run end to end."""
import pytest

from core.verify import Status, load_suite, run_checks


@pytest.mark.integration
class TestAcceptanceSuite:
    """Run data/acceptance.json against the shipped fixtures."""

    def test_quick_checks(self, session, suite_path, fixtures_dir):
        """Test that every check not marked slow passes."""
        table = run_checks(load_suite(suite_path), session, fixtures_dir, include_slow=False)
        failures = [(r.name, r.message) for r in table.results if r.status is Status.FAIL]
        assert not failures
        assert table.exit_code in (0, 2)

    @pytest.mark.slow
    def test_full_suite(self, session, suite_path, fixtures_dir):
        """Test that the whole suite passes, slow checks included."""
        table = run_checks(load_suite(suite_path), session, fixtures_dir)
        failures = [(r.name, r.message) for r in table.results if r.status is not Status.PASS]
        assert not failures
        assert table.exit_code == 0
