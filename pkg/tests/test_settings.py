"""Settings validation and YAML persistence."""

import pytest

from src.core.settings import ConfigManager, Settings


class TestSettings:

    def test_defaults_valid(self):
        settings = Settings()
        assert settings.default_primes
        assert settings.batch_workers >= 1

    @pytest.mark.parametrize('overrides', [
        {'default_primes': []},
        {'default_primes': [1]},
        {'default_primes': ['11']},
        {'slice_samples': 0},
        {'picard_samples': 0},
        {'batch_workers': 0},
        {'cache_dir': ''},
    ])
    def test_invalid(self, overrides):
        with pytest.raises(ValueError):
            Settings(**overrides)

    def test_nested_sections(self):
        settings = Settings.from_dict({
            'classification': {'default_primes': [101], 'certificate': True},
            'calibration': {'seed': 7},
            'performance': {'batch_workers': 3},
            'unknown': 1,
        })
        assert settings.default_primes == [101]
        assert settings.certificate
        assert settings.seed == 7
        assert settings.batch_workers == 3

    def test_calibration_key(self):
        assert Settings(seed=1).calibration_key() != Settings(seed=2).calibration_key()
        assert Settings(cache_dir='/a').calibration_key() == Settings(cache_dir='/b').calibration_key()

    def test_yaml_round_trip(self, tmp_path):
        settings = Settings(default_primes=[11, 101], include_hsop=True, seed=99,
                            cache_dir=str(tmp_path), batch_workers=2, show_progress=False)
        path = tmp_path / 'nested' / 'settings.yaml'
        settings.save_to_file(path)
        assert Settings.load_from_file(path) == settings

    def test_missing_file_gives_defaults(self, tmp_path):
        assert Settings.load_from_file(tmp_path / 'absent.yaml') == Settings()

    def test_malformed_yaml(self, tmp_path):
        path = tmp_path / 'settings.yaml'
        path.write_text("classification: [unclosed\n", encoding='utf-8')
        with pytest.raises(ValueError):
            Settings.load_from_file(path)


class TestConfigManager:

    def test_save_and_reload(self, tmp_path):
        manager = ConfigManager(tmp_path)
        settings = Settings(default_primes=[13], cache_dir=str(tmp_path))
        manager.save_settings(settings)
        assert ConfigManager(tmp_path).get_settings() == settings

    def test_reset(self, tmp_path):
        manager = ConfigManager(tmp_path)
        manager.save_settings(Settings(default_primes=[13], cache_dir=str(tmp_path)))
        assert manager.reset_to_defaults() == Settings()
