import pytest

from exppell.config import Config, ConfigError, from_env, load_config, parse_config_text


def test_defaults():
    c = load_config(environ={})
    assert (c.degree, c.height, c.samples, c.tolerance) == (4, 10, 4096, 1e-6)


def test_precedence(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# comment\ndegree = 2\nheight=7\nsamples = 64\n")
    c = load_config(str(path), {"height": 5, "samples": None}, {"EXPPELL_SAMPLES": "128"})
    assert (c.degree, c.height, c.samples) == (2, 5, 128)


def test_aliases():
    assert parse_config_text("d=3\nh=2\ntol=1e-4\ncap=50") == {
        "degree": 3, "height": 2, "tolerance": 1e-4, "pell_index_cap": 50}
    assert from_env({"EXPPELL_D": "1", "PATH": "/bin"}) == {"degree": 1}


@pytest.mark.parametrize("text", ["nope=1", "degree", "degree=x"])
def test_bad_files(text):
    with pytest.raises(ConfigError):
        parse_config_text(text)


@pytest.mark.parametrize("kw", [{"tolerance": 0.0}, {"tolerance": 1e-2}, {"samples": 0}, {"degree": -1}])
def test_validation(kw):
    with pytest.raises(ConfigError):
        Config(**kw)


def test_missing_file():
    with pytest.raises(ConfigError):
        load_config("/nonexistent/exppell.cfg", environ={})
