import pytest

from src.core.exceptions import InvalidConfigValue, UnknownPreset
from src.scenarios.decorators import exit_code_for, exit_code_on_error
from src.scenarios.exceptions import InvariantFailure
from src.services.accounting.exceptions import LedgerResidualExceeded
from src.services.dirac_modes.exceptions import WrongCase


class TestExitCodeFor:
    @pytest.mark.parametrize(
        "error, code",
        [
            (UnknownPreset("nope"), 4),
            (InvalidConfigValue("mass", "-1", "must be > 0"), 4),
            (LedgerResidualExceeded("plain", 0.1, 5e-3), 3),
            (InvariantFailure("no-crossing", "0 and 1"), 2),
            (WrongCase("barrier case3", "step case1"), 2),
        ],
    )
    def test_mapping(self, error, code):
        assert exit_code_for(error) == code

    def test_foreign_exceptions_propagate(self):
        with pytest.raises(KeyError):
            exit_code_for(KeyError("x"))


class TestExitCodeOnError:
    def test_successful_command(self):
        @exit_code_on_error
        def command():
            return 0

        assert command() == 0

    def test_ledger_failure(self):
        @exit_code_on_error
        def command():
            raise LedgerResidualExceeded("step3", 0.2, 5e-3)

        assert command() == 3

    def test_config_failure(self):
        @exit_code_on_error
        def command(name):
            raise UnknownPreset(name)

        assert command("nope") == 4

    def test_unexpected_error(self):
        @exit_code_on_error
        def command():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            command()
