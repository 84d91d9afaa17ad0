import re

import pytest

from src.exception import CustomException, UsageError
from src.utils import load_settings, save_text, timestamped_name


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("BURNSIDE_ORDER_CAP", "500")
    monkeypatch.setenv("BURNSIDE_SUBGROUP_CAP", "")
    monkeypatch.setenv("BURNSIDE_OUTPUT_DIR", "elsewhere")
    settings = load_settings()
    assert settings.order_cap == 500
    assert settings.subgroup_cap == 5000
    assert settings.output_dir == "elsewhere"


@pytest.mark.parametrize("value", ["0", "-3", "1.5"])
def test_settings_reject_bad_integers(value, monkeypatch):
    monkeypatch.setenv("BURNSIDE_ASSOC_SAMPLES", value)
    with pytest.raises(UsageError):
        load_settings()


def test_custom_exception_message():
    try:
        raise ZeroDivisionError("boom")
    except ZeroDivisionError as e:
        error = CustomException(e, stage="marks")
    assert str(error) == "[stage marks] boom"
    assert "line number" in error.detail
    assert error.exit_code == 3
    assert str(UsageError("bad flag")) == "bad flag"


def test_save_text_and_timestamped_name(tmp_path):
    path = save_text(str(tmp_path / "a" / "b.txt"), "x\n")
    assert open(path, encoding="utf-8").read() == "x\n"
    assert re.fullmatch(r"summary_\d{8}_\d{6}\.csv", timestamped_name("summary", "csv"))
