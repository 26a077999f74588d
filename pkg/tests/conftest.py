import pytest

CONFIG_KEYS = (
    "LOG_LEVEL",
    "DEBUG",
    "CHUNK_SIZE",
    "MAX_WORKERS",
    "DEFAULT_FORMAT",
    "DEFAULT_UNIT",
    "TABLE_THEME",
    "ENUMERATION_LIMIT",
)


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """Keep the developer's environment, .env and ~/.omega-entropy out of every test."""
    for key in CONFIG_KEYS:
        monkeypatch.delenv(key, raising=False)
    home = tmp_path / "home"
    home.mkdir()
    monkeypatch.setattr("pathlib.Path.home", lambda: home)
    monkeypatch.chdir(tmp_path)
    return home
