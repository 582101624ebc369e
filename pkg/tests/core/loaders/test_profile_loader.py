import pytest

from core.loaders.profile_loader import ProfileLoader


def test_load_profile(tmp_path):
    (tmp_path / "fast.yaml").write_text("precision_bits: 64\nworkers: 4\n", encoding="utf-8")

    profile = ProfileLoader(str(tmp_path)).load("fast")

    assert profile.precision_bits == 64
    assert profile.workers == 4
    assert profile.digits == 30


def test_empty_profile_uses_defaults(tmp_path):
    (tmp_path / "empty.yaml").write_text("", encoding="utf-8")

    assert ProfileLoader(str(tmp_path)).load("empty").workers == 1


@pytest.mark.parametrize(
    "name, content, error",
    [
        ("", None, ValueError),
        ("missing", None, FileNotFoundError),
        ("list", "- 1\n- 2\n", ValueError),
        ("unknown", "colour: red\n", ValueError),
    ],
)
def test_load_profile_errors(tmp_path, name, content, error):
    if content is not None:
        (tmp_path / f"{name}.yaml").write_text(content, encoding="utf-8")

    with pytest.raises(error):
        ProfileLoader(str(tmp_path)).load(name)


def test_load_or_default(tmp_path):
    loader = ProfileLoader(str(tmp_path))

    assert loader.load_or_default().precision_bits == 128

    with pytest.raises(FileNotFoundError):
        loader.load_or_default("missing")

    (tmp_path / "default.yaml").write_text("digits: 12\n", encoding="utf-8")
    assert loader.load_or_default().digits == 12


def test_bundled_default_profile_loads():
    profile = ProfileLoader().load("default")

    assert profile.output_format == "json"
    assert profile.max_m == 50000
